#include "eonsim/cli.hpp"

#include <exception>
#include <filesystem>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "eonsim/config.hpp"
#include "eonsim/errors.hpp"
#include "eonsim/io.hpp"
#include "eonsim/simengine.hpp"
#include "eonsim/topology.hpp"
#include "eonsim/traffic.hpp"

namespace eonsim {

namespace {

struct Options {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  bool audit = false;
  std::size_t load_index = 0;
};

std::optional<RunConfig> read_config(const Options& opt, std::ostream& err) {
  auto check = load_config(opt.config);
  if (!check.ok()) {
    for (const auto& d : check.diagnostics) err << "config error: " << d << '\n';
    return std::nullopt;
  }
  RunConfig cfg = std::move(*check.config);
  if (!opt.out.empty()) cfg.output_path = opt.out;
  if (opt.seed) cfg.seeds = {*opt.seed};
  return cfg;
}

int do_run(const Options& opt, std::ostream& out, std::ostream& err) {
  auto cfg = read_config(opt, err);
  if (!cfg) return kExitConfigError;
  std::optional<Topology> topo;
  try {
    topo.emplace(load_topology(cfg->topology_path));
  } catch (const std::exception& e) {
    err << "topology error: " << e.what() << '\n';
    return kExitTopologyError;
  }

  SweepOptions so;
  so.num_demands = cfg->num_demands;
  so.slots_per_link = cfg->slots;
  so.warmup_demands = cfg->warmup_demands;
  so.audit = opt.audit;
  so.record_outcomes = cfg->emit_outcome_log;
  so.jobs = opt.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.jobs;

  try {
    auto outputs = run_sweep(*topo, cfg->metrics, cfg->loads, cfg->seeds, so);
    std::vector<SimResult> results;
    results.reserve(outputs.size());
    for (const auto& o : outputs) results.push_back(o.result);
    if (cfg->emit_outcome_log) {
      const auto dir = outcome_log_dir(cfg->output_path);
      for (const auto& o : outputs)
        write_file_atomic(dir / outcome_log_name(o.result), outcomes_to_csv(o.outcomes));
    }
    write_file_atomic(cfg->output_path, results_to_csv(results));
    for (const auto& r : results) out << summarize(r) << '\n';
    out << "wrote " << results.size() << " results to " << cfg->output_path.string() << '\n';
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitOk;
}

int do_trace(const Options& opt, std::ostream& out, std::ostream& err) {
  auto cfg = read_config(opt, err);
  if (!cfg) return kExitConfigError;
  if (opt.load_index >= cfg->loads.size()) {
    err << "config error: --load " << opt.load_index << " out of range (" << cfg->loads.size()
        << " loads configured)\n";
    return kExitConfigError;
  }
  std::optional<Topology> topo;
  try {
    topo.emplace(load_topology(cfg->topology_path));
  } catch (const std::exception& e) {
    err << "topology error: " << e.what() << '\n';
    return kExitTopologyError;
  }
  try {
    const Load& load = cfg->loads[opt.load_index];
    const TrafficConfig tc{load.lambda, load.mu, cfg->num_demands, cfg->seeds.front()};
    write_trace_csv(opt.out, generate_trace(tc, *topo));
    out << "wrote " << tc.num_demands << " demands (seed " << tc.seed << ", load "
        << tc.load_erlang() << " Erlang) to " << opt.out << '\n';
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitOk;
}

int do_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  auto cfg = read_config(opt, err);
  if (!cfg) return kExitConfigError;
  try {
    auto topo = load_topology(cfg->topology_path);
    out << "ok: " << topo.name() << " (" << topo.num_nodes() << " nodes, " << topo.num_links()
        << " links), " << cfg->metrics.size() << " metrics x " << cfg->loads.size() << " loads x "
        << cfg->seeds.size() << " seeds\n";
  } catch (const std::exception& e) {
    err << "topology error: " << e.what() << '\n';
    return kExitTopologyError;
  }
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete-event simulator for routing in elastic optical networks", "eonsim"};
  app.require_subcommand(1);
  Options opt;

  auto* run = app.add_subcommand("run", "Run the sweep described by a config file");
  run->add_option("--config", opt.config, "Run configuration (JSON)")->required();
  run->add_option("--out", opt.out, "Results CSV (overrides the config)");
  run->add_option("--seed", opt.seed, "Use this single seed instead of the configured list");
  run->add_option("--jobs", opt.jobs, "Parallel runs (0 = all cores)")->capture_default_str();
  run->add_flag("--audit", opt.audit, "Recheck spectrum invariants after every event");

  auto* trace = app.add_subcommand("trace", "Export the demand trace for one load and seed");
  trace->add_option("--config", opt.config, "Run configuration (JSON)")->required();
  trace->add_option("--out", opt.out, "Trace CSV to write")->required();
  trace->add_option("--seed", opt.seed, "Seed (default: first configured seed)");
  trace->add_option("--load", opt.load_index, "Index into the configured loads")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Check a config file and its topology");
  validate->add_option("--config", opt.config, "Run configuration (JSON)")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*run) return do_run(opt, out, err);
    if (*trace) return do_trace(opt, out, err);
    return do_validate(opt, out, err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

}  // namespace eonsim
