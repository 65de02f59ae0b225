#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "eonsim/config.hpp"
#include "eonsim/cost.hpp"
#include "eonsim/errors.hpp"
#include "eonsim/rmsa.hpp"
#include "eonsim/routing.hpp"
#include "eonsim/simengine.hpp"
#include "eonsim/spectrum.hpp"
#include "eonsim/topology.hpp"
#include "eonsim/traffic.hpp"

namespace py = pybind11;
using namespace eonsim;

namespace {

std::vector<std::uint32_t> node_values(const std::vector<NodeId>& nodes) {
  std::vector<std::uint32_t> out;
  for (NodeId n : nodes) out.push_back(n.value);
  return out;
}

py::dict result_dict(const SimResult& r) {
  py::dict d;
  d["topology"] = r.topology_name;
  d["metric"] = metric_label(r.spec);
  d["merge"] = std::string(to_string(r.spec.merge));
  d["alpha"] = r.spec.alpha;
  d["lambda"] = r.lambda;
  d["mu"] = r.mu;
  d["load_erlang"] = r.load_erlang;
  d["seed"] = r.seed;
  d["num_demands"] = r.num_demands;
  d["served"] = r.served;
  d["blocked_total"] = r.blocked_total;
  d["blocked_distance"] = r.blocked_distance;
  d["blocked_spectrum"] = r.blocked_spectrum;
  d["blocking_probability"] = r.blocking_probability;
  d["transceivers_total"] = r.transceivers_total;
  d["transceivers_per_served"] = r.transceivers_per_served;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Elastic optical network routing simulator (C++ core).";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::enum_<Metric>(m, "Metric")
      .value("LL", Metric::LL)
      .value("U", Metric::U)
      .value("LLU", Metric::LLU)
      .value("LLP", Metric::LLP);
  py::enum_<Merge>(m, "Merge")
      .value("Linear", Merge::Linear)
      .value("Quadratic", Merge::Quadratic)
      .value("Sqrt", Merge::Sqrt);

  py::class_<CostSpec>(m, "CostSpec")
      .def(py::init([](Metric metric, Merge merge, double alpha, bool llp_literal) {
             return CostSpec{metric, merge, alpha, llp_literal};
           }),
           py::arg("metric") = Metric::LL, py::arg("merge") = Merge::Linear,
           py::arg("alpha") = 1.0, py::arg("llp_literal") = false)
      .def_readwrite("metric", &CostSpec::metric)
      .def_readwrite("merge", &CostSpec::merge)
      .def_readwrite("alpha", &CostSpec::alpha)
      .def_readwrite("llp_literal", &CostSpec::llp_literal)
      .def("__repr__", [](const CostSpec& s) {
        return "CostSpec(" + metric_label(s) + ", " + std::string(to_string(s.merge)) +
               ", alpha=" + std::to_string(s.alpha) + ")";
      });

  m.def("link_cost", &link_cost, py::arg("spec"), py::arg("normalized_length"),
        py::arg("usage"), py::arg("accommodation"));

  py::class_<Topology>(m, "Topology")
      .def_property_readonly("name", &Topology::name)
      .def_property_readonly("num_nodes", &Topology::num_nodes)
      .def_property_readonly("num_links", &Topology::num_links)
      .def_property_readonly("max_link_length_km", &Topology::max_link_length_km)
      .def("links",
           [](const Topology& t) {
             py::list out;
             for (const Link& l : t.links())
               out.append(py::make_tuple(l.id.value, l.a.value, l.b.value, l.length_km));
             return out;
           })
      .def("normalized_length",
           [](const Topology& t, std::uint32_t link) { return normalized_length(t, t.link(LinkId{link})); })
      .def("incident_links",
           [](const Topology& t, std::uint32_t node) {
             std::vector<std::uint32_t> out;
             for (LinkId id : t.incident(NodeId{node})) out.push_back(id.value);
             return out;
           })
      .def("serialize", &serialize_topology);

  m.def("load_topology", &load_topology, py::arg("path"));
  m.def("parse_topology", &parse_topology, py::arg("text"), py::arg("name") = "topology");

  py::class_<SlotRange>(m, "SlotRange")
      .def(py::init<std::size_t, std::size_t>(), py::arg("start"), py::arg("count"))
      .def_readwrite("start", &SlotRange::start)
      .def_readwrite("count", &SlotRange::count)
      .def("__eq__", [](const SlotRange& a, const SlotRange& b) { return a == b; })
      .def("__repr__", [](const SlotRange& r) {
        return "SlotRange(" + std::to_string(r.start) + ", " + std::to_string(r.count) + ")";
      });

  py::class_<SpectrumGrid>(m, "SpectrumGrid")
      .def(py::init<std::size_t>(), py::arg("total_slots") = kDefaultSlots)
      .def_property_readonly("total_slots", &SpectrumGrid::total_slots)
      .def_property_readonly("used_count", &SpectrumGrid::used_count)
      .def("allocate", &SpectrumGrid::allocate)
      .def("release", &SpectrumGrid::release)
      .def("is_occupied", &SpectrumGrid::is_occupied)
      .def("usage", [](const SpectrumGrid& g) { return usage(g); })
      .def("accommodation_probability",
           [](const SpectrumGrid& g, std::size_t n) { return accommodation_probability(g, n); });

  m.def("first_fit",
        [](const std::vector<SpectrumGrid>& grids, std::size_t needed) {
          return first_fit(std::span<const SpectrumGrid>(grids), needed);
        },
        py::arg("grids"), py::arg("needed_slots"));

  m.def("shortest_path",
        [](const Topology& t, const std::vector<double>& weights, std::uint32_t src,
           std::uint32_t dst) -> py::object {
          auto p = shortest_path(t, weights, NodeId{src}, NodeId{dst});
          if (!p) return py::none();
          py::dict d;
          d["nodes"] = node_values(p->nodes);
          std::vector<std::uint32_t> links;
          for (LinkId l : p->links) links.push_back(l.value);
          d["links"] = links;
          d["total_length_km"] = p->total_length_km;
          d["total_cost"] = p->total_cost;
          return d;
        },
        py::arg("topology"), py::arg("weights"), py::arg("src"), py::arg("dst"));

  m.def("select_modulation",
        [](double km) -> py::object {
          auto f = select_modulation(km);
          if (!f) return py::none();
          return py::str(std::string(to_string(f->name)));
        },
        py::arg("path_length_km"));

  m.def("required_slots",
        [](double bitrate, const std::string& name) {
          for (const auto& f : kModulationFormats)
            if (to_string(f.name) == name) return required_slots(bitrate, f);
          throw py::value_error("unknown modulation format '" + name + "'");
        },
        py::arg("bitrate_gbps"), py::arg("modulation"));

  py::class_<Demand>(m, "Demand")
      .def_readonly("id", &Demand::id)
      .def_readonly("arrival_time", &Demand::arrival_time)
      .def_property_readonly("source", [](const Demand& d) { return d.source.value; })
      .def_property_readonly("destination", [](const Demand& d) { return d.destination.value; })
      .def_readonly("bitrate_gbps", &Demand::bitrate_gbps)
      .def_readonly("holding_time", &Demand::holding_time);

  m.def("generate_trace",
        [](const Topology& t, double lambda, double mu, std::uint64_t num_demands, std::uint64_t seed) {
          return generate_trace(TrafficConfig{lambda, mu, num_demands, seed}, t);
        },
        py::arg("topology"), py::arg("lambda_") = 10.0, py::arg("mu") = 1.0,
        py::arg("num_demands") = 10000, py::arg("seed") = 1);
  m.def("trace_to_csv", &trace_to_csv);
  m.def("trace_from_csv", &trace_from_csv);

  m.def("run",
        [](const Topology& t, const CostSpec& spec, const std::vector<Demand>& trace,
           std::size_t slots, bool audit, std::uint64_t warmup) {
          RunOptions opt;
          opt.slots_per_link = slots;
          opt.audit = audit;
          opt.warmup_demands = warmup;
          py::gil_scoped_release release;
          auto out = run(t, spec, trace, opt);
          py::gil_scoped_acquire acquire;
          return result_dict(out.result);
        },
        py::arg("topology"), py::arg("spec"), py::arg("trace"), py::arg("slots") = kDefaultSlots,
        py::arg("audit") = false, py::arg("warmup_demands") = 0);

  m.def("run_sweep",
        [](const Topology& t, const std::vector<CostSpec>& specs,
           const std::vector<std::pair<double, double>>& loads, const std::vector<std::uint64_t>& seeds,
           std::uint64_t num_demands, std::size_t slots, unsigned jobs) {
          std::vector<Load> ls;
          for (auto [lambda, mu] : loads) ls.push_back({lambda, mu});
          SweepOptions opt;
          opt.num_demands = num_demands;
          opt.slots_per_link = slots;
          opt.jobs = jobs;
          std::vector<RunOutput> outs;
          {
            py::gil_scoped_release release;
            outs = run_sweep(t, specs, ls, seeds, opt);
          }
          std::vector<SimResult> results;
          py::list rows;
          for (const auto& o : outs) {
            rows.append(result_dict(o.result));
            results.push_back(o.result);
          }
          return py::make_tuple(rows, results_to_csv(results));
        },
        py::arg("topology"), py::arg("specs"), py::arg("loads"), py::arg("seeds"),
        py::arg("num_demands") = 10000, py::arg("slots") = kDefaultSlots, py::arg("jobs") = 1,
        "Returns (rows, csv_text); rows are dicts keyed like the results CSV header.");

  m.def("validate_config",
        [](const std::string& text, const std::string& base_dir) {
          auto check = validate_config(text, base_dir);
          return check.diagnostics;
        },
        py::arg("text"), py::arg("base_dir") = "",
        "Returns the list of diagnostics; empty means the config is valid.");

  m.attr("RESULTS_HEADER") = kResultsHeader;
  m.attr("OUTCOME_HEADER") = kOutcomeHeader;
}
