#include "eonsim/simengine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <queue>
#include <sstream>
#include <thread>
#include <tuple>

#include "eonsim/errors.hpp"
#include "eonsim/format.hpp"

namespace eonsim {

namespace {

struct PendingDeparture {
  double time;
  std::uint64_t id;

  bool operator>(const PendingDeparture& o) const {
    return time != o.time ? time > o.time : id > o.id;
  }
};

// Rebuilds occupancy from the active connections and compares it with the
// grids bit for bit.
void audit_state(const NetworkState& state, const std::map<std::uint64_t, Connection>& active) {
  const std::size_t slots = state.slots_per_link();
  std::vector<std::vector<std::int64_t>> owner(state.topology().num_links(),
                                               std::vector<std::int64_t>(slots, -1));
  for (const auto& [id, c] : active) {
    if (c.slots.count != c.data_slots + kGuardBandSlots)
      throw InternalError("audit: connection " + std::to_string(id) + " has wrong guard band");
    if (c.path.total_length_km > c.modulation.max_reach_km)
      throw InternalError("audit: connection " + std::to_string(id) + " exceeds modulation reach");
    for (LinkId lid : c.path.links) {
      for (std::size_t s = c.slots.start; s < c.slots.end(); ++s) {
        auto& o = owner.at(lid.value).at(s);
        if (o != -1)
          throw InternalError("audit: slot " + std::to_string(s) + " on link " +
                              std::to_string(lid.value) + " double-booked by " +
                              std::to_string(o) + " and " + std::to_string(id));
        o = static_cast<std::int64_t>(id);
      }
    }
  }
  for (std::size_t l = 0; l < owner.size(); ++l) {
    const auto& g = state.grids()[l];
    for (std::size_t s = 0; s < slots; ++s) {
      if (g.is_occupied(s) != (owner[l][s] != -1))
        throw InternalError("audit: grid of link " + std::to_string(l) + " disagrees at slot " +
                            std::to_string(s));
    }
  }
}

std::string join_nodes(const std::vector<NodeId>& nodes) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(nodes[i].value);
  }
  return out;
}

}  // namespace

RunOutput run(const Topology& topology, const CostSpec& spec, const std::vector<Demand>& trace,
              const RunOptions& options) {
  if (trace.empty()) throw ValidationError("trace is empty");
  validate_trace(trace, topology);
  if (options.warmup_demands >= trace.size())
    throw ValidationError("warmup_demands must be smaller than the trace length");

  NetworkState state(topology, options.slots_per_link);
  std::map<std::uint64_t, Connection> active;
  std::priority_queue<PendingDeparture, std::vector<PendingDeparture>, std::greater<>> departures;

  RunOutput out;
  SimResult& r = out.result;
  r.topology_name = topology.name();
  r.spec = spec;
  r.lambda = options.lambda;
  r.mu = options.mu;
  r.load_erlang = options.mu > 0.0 ? options.lambda / options.mu : 0.0;
  r.seed = options.seed;
  r.num_demands = trace.size() - options.warmup_demands;
  if (options.record_outcomes) out.outcomes.reserve(trace.size());

  std::optional<Event> last;
  auto advance = [&](const Event& e) {
    if (last && !(last->key() < e.key()))
      throw InternalError("event order violated at t=" + format_double(e.time));
    last = e;
    ++out.events_processed;
  };

  auto depart = [&] {
    const PendingDeparture d = departures.top();
    departures.pop();
    advance(Event{d.time, EventKind::Departure, d.id});
    auto it = active.find(d.id);
    if (it == active.end()) throw InternalError("departure of unknown connection " + std::to_string(d.id));
    state.release(it->second.path, it->second.slots);
    active.erase(it);
  };

  for (const Demand& demand : trace) {
    while (!departures.empty() && departures.top().time <= demand.arrival_time) {
      depart();
      if (options.audit) {
        audit_state(state, active);
        ++out.audits_passed;
      }
    }
    advance(Event{demand.arrival_time, EventKind::Arrival, demand.id});

    Admission adm = try_admit(state, spec, demand);
    const bool counted = demand.id >= options.warmup_demands;
    if (adm.admitted()) {
      const Connection& c = *adm.connection;
      if (!(c.departure_time > demand.arrival_time))
        throw InternalError("departure not after arrival for demand " + std::to_string(demand.id));
      departures.push({c.departure_time, c.demand_id});
      if (counted) {
        ++r.served;
        r.transceivers_total += c.transceivers();
      }
      active.emplace(c.demand_id, c);
    } else if (counted) {
      ++r.blocked_total;
      if (*adm.block == BlockReason::Distance)
        ++r.blocked_distance;
      else
        ++r.blocked_spectrum;
    }
    if (options.record_outcomes) {
      Outcome o;
      o.demand_id = demand.id;
      o.block = adm.block;
      o.path_nodes = adm.path.nodes;
      o.modulation = adm.modulation;
      if (adm.connection) o.slots = adm.connection->slots;
      o.path_length_km = adm.path.total_length_km;
      out.outcomes.push_back(std::move(o));
    }
    if (options.audit) {
      audit_state(state, active);
      ++out.audits_passed;
    }
  }
  while (!departures.empty()) {
    depart();
    if (options.audit) {
      audit_state(state, active);
      ++out.audits_passed;
    }
  }

  out.grids_empty_at_end = state.empty() && active.empty();
  if (!out.grids_empty_at_end) throw InternalError("spectrum not empty after final departure");

  r.blocking_probability =
      static_cast<double>(r.blocked_total) / static_cast<double>(r.num_demands);
  r.transceivers_per_served =
      r.served ? static_cast<double>(r.transceivers_total) / static_cast<double>(r.served) : 0.0;
  if (r.served + r.blocked_total != r.num_demands ||
      r.blocked_total != r.blocked_distance + r.blocked_spectrum)
    throw InternalError("result counters inconsistent");
  return out;
}

std::vector<RunOutput> run_sweep(const Topology& topology, const std::vector<CostSpec>& specs,
                                 const std::vector<Load>& loads,
                                 const std::vector<std::uint64_t>& seeds,
                                 const SweepOptions& options) {
  if (specs.empty() || loads.empty() || seeds.empty())
    throw ValidationError("sweep needs at least one spec, load and seed");

  std::vector<std::vector<Demand>> traces;
  traces.reserve(loads.size() * seeds.size());
  for (const Load& load : loads) {
    for (std::uint64_t seed : seeds) {
      traces.push_back(
          generate_trace(TrafficConfig{load.lambda, load.mu, options.num_demands, seed}, topology));
    }
  }

  const std::size_t per_spec = loads.size() * seeds.size();
  const std::size_t total = specs.size() * per_spec;
  std::vector<RunOutput> results(total);

  auto job = [&](std::size_t index) {
    const std::size_t s = index / per_spec;
    const std::size_t t = index % per_spec;
    const Load& load = loads[t / seeds.size()];
    RunOptions ro;
    ro.slots_per_link = options.slots_per_link;
    ro.warmup_demands = options.warmup_demands;
    ro.audit = options.audit;
    ro.record_outcomes = options.record_outcomes;
    ro.lambda = load.lambda;
    ro.mu = load.mu;
    ro.seed = seeds[t % seeds.size()];
    results[index] = run(topology, specs[s], traces[t], ro);
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(total)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < total; ++i) job(i);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < total; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = total;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::string result_row(const SimResult& r) {
  std::string row;
  row += r.topology_name + ',';
  row += metric_label(r.spec) + ',';
  row += std::string(to_string(r.spec.merge)) + ',';
  row += format_double(r.spec.alpha) + ',';
  row += format_double(r.lambda) + ',';
  row += format_double(r.mu) + ',';
  row += format_double(r.load_erlang) + ',';
  row += std::to_string(r.seed) + ',';
  row += std::to_string(r.num_demands) + ',';
  row += std::to_string(r.served) + ',';
  row += std::to_string(r.blocked_total) + ',';
  row += std::to_string(r.blocked_distance) + ',';
  row += std::to_string(r.blocked_spectrum) + ',';
  row += format_double(r.blocking_probability) + ',';
  row += format_double(r.transceivers_per_served);
  return row;
}

std::string results_to_csv(const std::vector<SimResult>& results) {
  std::string out = kResultsHeader;
  out += '\n';
  for (const auto& r : results) out += result_row(r) + '\n';
  return out;
}

std::string outcomes_to_csv(const std::vector<Outcome>& outcomes) {
  std::string out = kOutcomeHeader;
  out += '\n';
  for (const Outcome& o : outcomes) {
    out += std::to_string(o.demand_id) + ',';
    out += o.admitted() ? "admitted," : "blocked,";
    if (o.block) out += to_string(*o.block);
    out += ',' + join_nodes(o.path_nodes) + ',';
    if (o.modulation) out += to_string(o.modulation->name);
    out += ',';
    if (o.slots) out += std::to_string(o.slots->start) + ',' + std::to_string(o.slots->count);
    else out += ',';
    out += ',' + format_double(o.path_length_km) + '\n';
  }
  return out;
}

std::string summarize(const SimResult& r) {
  std::ostringstream ss;
  ss << r.topology_name << " metric=" << metric_label(r.spec) << " merge=" << to_string(r.spec.merge)
     << " alpha=" << format_double(r.spec.alpha) << " load=" << format_double(r.load_erlang)
     << " seed=" << r.seed << " served=" << r.served << "/" << r.num_demands
     << " blocking=" << format_double(r.blocking_probability)
     << " (distance " << r.blocked_distance << ", spectrum " << r.blocked_spectrum << ")"
     << " transceivers/served=" << format_double(r.transceivers_per_served);
  return ss.str();
}

}  // namespace eonsim
