#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "eonsim/cost.hpp"
#include "eonsim/routing.hpp"
#include "eonsim/spectrum.hpp"
#include "eonsim/topology.hpp"
#include "eonsim/traffic.hpp"

namespace eonsim {

enum class ModulationName { BPSK, QPSK, QAM8, QAM16 };

struct ModulationFormat {
  ModulationName name;
  double max_rate_per_slot_gbps;
  double max_reach_km;

  bool operator==(const ModulationFormat&) const = default;
};

// Reach and per-slot rate table, ordered from least to most spectrally
// efficient.
inline constexpr std::array<ModulationFormat, 4> kModulationFormats{{
    {ModulationName::BPSK, 12.5, 5000.0},
    {ModulationName::QPSK, 25.0, 2500.0},
    {ModulationName::QAM8, 37.5, 1250.0},
    {ModulationName::QAM16, 50.0, 625.0},
}};

inline constexpr std::size_t kGuardBandSlots = 1;

std::string_view to_string(ModulationName name);

// Most efficient format whose reach covers the path (boundary inclusive);
// nullopt beyond the longest reach.
std::optional<ModulationFormat> select_modulation(double path_length_km);

// ceil(bitrate / per-slot rate) data slots plus one guard-band slot.
std::size_t required_slots(double bitrate_gbps, const ModulationFormat& modulation);

enum class BlockReason { Distance, Spectrum };
std::string_view to_string(BlockReason reason);

struct Connection {
  std::uint64_t demand_id = 0;
  Path path;
  ModulationFormat modulation;
  SlotRange slots;
  std::size_t data_slots = 0;  // slots.count - guard band
  double departure_time = 0.0;

  // Transceivers consumed: one per data slot, guard band excluded.
  std::size_t transceivers() const { return data_slots; }
};

// Outcome of one admission attempt. On a block, `path` (and `modulation` for
// spectrum blocks) still record what routing chose.
struct Admission {
  std::optional<Connection> connection;
  std::optional<BlockReason> block;
  Path path;
  std::optional<ModulationFormat> modulation;

  bool admitted() const { return connection.has_value(); }
};

// Spectrum state of a whole network plus the static per-topology data the
// admission pipeline needs (normalized lengths, shortest lengths).
class NetworkState {
 public:
  explicit NetworkState(const Topology& topology, std::size_t slots_per_link = kDefaultSlots);

  const Topology& topology() const { return *topology_; }
  std::size_t slots_per_link() const { return slots_; }
  const std::vector<SpectrumGrid>& grids() const { return grids_; }
  const SpectrumGrid& grid(LinkId id) const { return grids_.at(id.value); }
  double normalized_length(LinkId id) const { return normalized_.at(id.value); }
  double shortest_length_km(NodeId src, NodeId dst) const {
    return shortest_km_[src.value * topology_->num_nodes() + dst.value];
  }

  // Occupies/frees `range` on every link of `path`. Both are all-or-nothing:
  // on InternalError no grid has changed.
  void allocate(const Path& path, SlotRange range);
  void release(const Path& path, SlotRange range);

  bool empty() const;

 private:
  const Topology* topology_;
  std::size_t slots_;
  std::vector<SpectrumGrid> grids_;
  std::vector<double> normalized_;
  std::vector<double> shortest_km_;
};

// Slot count used for the accommodation-probability term while routing: the
// most efficient format the demand's shortest-by-length path allows (BPSK
// if even that path is out of reach).
std::size_t provisional_slots(const NetworkState& state, const Demand& demand);

// Per-link weights for one demand, frozen from the current grid state.
std::vector<double> link_weights(const NetworkState& state, const CostSpec& spec,
                                 const Demand& demand);

// Route, pick modulation, first-fit spectrum. On success the connection's
// slots are allocated on every path link; on a block the state is untouched.
Admission try_admit(NetworkState& state, const CostSpec& spec, const Demand& demand);

}  // namespace eonsim
