#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "eonsim/topology.hpp"

namespace eonsim {

struct Demand {
  std::uint64_t id = 0;
  double arrival_time = 0.0;
  NodeId source;
  NodeId destination;
  int bitrate_gbps = 1;  // 1..50
  double holding_time = 0.0;

  double departure_time() const { return arrival_time + holding_time; }
  bool operator==(const Demand&) const = default;
};

inline constexpr int kMinBitrateGbps = 1;
inline constexpr int kMaxBitrateGbps = 50;

struct TrafficConfig {
  double lambda = 10.0;  // arrival rate
  double mu = 1.0;       // service rate, mean holding time 1/mu
  std::uint64_t num_demands = 10000;
  std::uint64_t seed = 1;

  double load_erlang() const { return lambda / mu; }
};

// Poisson arrivals, exponential holding times, endpoints uniform over ordered
// distinct pairs, bitrate uniform over integers 1..50. Fully determined by
// the config and the topology's node count; see random.hpp for the streams.
std::vector<Demand> generate_trace(const TrafficConfig& config, const Topology& topology);

// Throws ValidationError naming the first offending demand.
void validate_trace(const std::vector<Demand>& trace, const Topology& topology);

// CSV with header id,arrival_time,source,destination,bitrate_gbps,holding_time.
// Times are written in shortest round-trip form, so read(write(t)) == t.
std::string trace_to_csv(const std::vector<Demand>& trace);
std::vector<Demand> trace_from_csv(std::string_view text);

void write_trace_csv(const std::filesystem::path& path, const std::vector<Demand>& trace);
std::vector<Demand> read_trace_csv(const std::filesystem::path& path);

}  // namespace eonsim
