#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eonsim/cost.hpp"
#include "eonsim/rmsa.hpp"
#include "eonsim/topology.hpp"
#include "eonsim/traffic.hpp"

namespace eonsim {

enum class EventKind { Departure = 0, Arrival = 1 };

struct Event {
  double time = 0.0;
  EventKind kind = EventKind::Arrival;
  std::uint64_t id = 0;  // demand id; connections share their demand's id

  // Processing order: time, then departures before arrivals, then id.
  auto key() const { return std::tuple(time, static_cast<int>(kind), id); }
};

struct SimResult {
  std::string topology_name;
  CostSpec spec;
  double lambda = 0.0;
  double mu = 0.0;
  double load_erlang = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t num_demands = 0;  // demands counted (after warmup)
  std::uint64_t served = 0;
  std::uint64_t blocked_total = 0;
  std::uint64_t blocked_distance = 0;
  std::uint64_t blocked_spectrum = 0;
  double blocking_probability = 0.0;
  std::uint64_t transceivers_total = 0;
  double transceivers_per_served = 0.0;
};

struct Outcome {
  std::uint64_t demand_id = 0;
  std::optional<BlockReason> block;  // nullopt = admitted
  std::vector<NodeId> path_nodes;
  std::optional<ModulationFormat> modulation;
  std::optional<SlotRange> slots;
  double path_length_km = 0.0;

  bool admitted() const { return !block.has_value(); }
};

struct RunOptions {
  std::size_t slots_per_link = kDefaultSlots;
  std::uint64_t warmup_demands = 0;
  // Recheck every grid against the active connections after each event.
  bool audit = false;
  bool record_outcomes = false;
  // Labels copied into the SimResult; the trace itself is passed separately.
  double lambda = 0.0;
  double mu = 0.0;
  std::uint64_t seed = 0;
};

struct RunOutput {
  SimResult result;
  std::vector<Outcome> outcomes;   // one per demand when record_outcomes
  std::uint64_t events_processed = 0;
  std::uint64_t audits_passed = 0;
  bool grids_empty_at_end = false;
};

// Processes every arrival and departure of `trace` in event order. Throws
// InternalError on any consistency failure (double booking, time reversal,
// failed audit) and ValidationError on an invalid trace.
RunOutput run(const Topology& topology, const CostSpec& spec, const std::vector<Demand>& trace,
              const RunOptions& options = {});

struct Load {
  double lambda = 10.0;
  double mu = 1.0;

  double erlang() const { return lambda / mu; }
  bool operator==(const Load&) const = default;
};

struct SweepOptions {
  std::uint64_t num_demands = 10000;
  std::size_t slots_per_link = kDefaultSlots;
  std::uint64_t warmup_demands = 0;
  bool audit = false;
  bool record_outcomes = false;
  unsigned jobs = 1;
};

// One run per (spec, load, seed), ordered spec-major, then load, then seed.
// The trace for each (load, seed) is generated once and shared by every spec.
// Runs execute on up to `jobs` threads; the output order does not depend on
// scheduling.
std::vector<RunOutput> run_sweep(const Topology& topology, const std::vector<CostSpec>& specs,
                                 const std::vector<Load>& loads,
                                 const std::vector<std::uint64_t>& seeds,
                                 const SweepOptions& options = {});

inline constexpr const char* kResultsHeader =
    "topology,metric,merge,alpha,lambda,mu,load_erlang,seed,num_demands,served,blocked_total,"
    "blocked_distance,blocked_spectrum,blocking_probability,transceivers_per_served";

inline constexpr const char* kOutcomeHeader =
    "demand_id,outcome,block_reason,path_nodes,modulation,slot_start,slot_count,path_length_km";

std::string result_row(const SimResult& result);
std::string results_to_csv(const std::vector<SimResult>& results);
std::string outcomes_to_csv(const std::vector<Outcome>& outcomes);

// One-line human summary of a result.
std::string summarize(const SimResult& result);

}  // namespace eonsim
