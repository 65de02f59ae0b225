#include "eonsim/rmsa.hpp"

#include <cmath>
#include <string>

#include "eonsim/errors.hpp"

namespace eonsim {

std::string_view to_string(ModulationName name) {
  switch (name) {
    case ModulationName::BPSK: return "BPSK";
    case ModulationName::QPSK: return "QPSK";
    case ModulationName::QAM8: return "8QAM";
    case ModulationName::QAM16: return "16QAM";
  }
  return "?";
}

std::string_view to_string(BlockReason reason) {
  switch (reason) {
    case BlockReason::Distance: return "distance";
    case BlockReason::Spectrum: return "spectrum";
  }
  return "?";
}

std::optional<ModulationFormat> select_modulation(double path_length_km) {
  if (!(path_length_km > 0.0)) throw InternalError("path length must be positive");
  for (auto it = kModulationFormats.rbegin(); it != kModulationFormats.rend(); ++it) {
    if (path_length_km <= it->max_reach_km) return *it;
  }
  return std::nullopt;
}

std::size_t required_slots(double bitrate_gbps, const ModulationFormat& modulation) {
  if (!(bitrate_gbps > 0.0)) throw InternalError("bitrate must be positive");
  const double data = std::ceil(bitrate_gbps / modulation.max_rate_per_slot_gbps);
  return static_cast<std::size_t>(data) + kGuardBandSlots;
}

NetworkState::NetworkState(const Topology& topology, std::size_t slots_per_link)
    : topology_(&topology),
      slots_(slots_per_link),
      grids_(topology.num_links(), SpectrumGrid(slots_per_link)),
      shortest_km_(all_pairs_shortest_length_km(topology)) {
  normalized_.reserve(topology.num_links());
  for (const Link& l : topology.links()) normalized_.push_back(eonsim::normalized_length(topology, l));
}

void NetworkState::allocate(const Path& path, SlotRange range) {
  for (LinkId id : path.links)
    if (!grids_.at(id.value).is_free(range))
      throw InternalError("allocation over busy spectrum on link " + std::to_string(id.value));
  for (LinkId id : path.links) grids_[id.value].allocate(range);
}

void NetworkState::release(const Path& path, SlotRange range) {
  for (LinkId id : path.links) {
    const auto& g = grids_.at(id.value);
    if (range.end() > g.total_slots())
      throw InternalError("release range out of bounds on link " + std::to_string(id.value));
    for (std::size_t s = range.start; s < range.end(); ++s)
      if (!g.is_occupied(s))
        throw InternalError("release of free slot " + std::to_string(s) + " on link " +
                            std::to_string(id.value));
  }
  for (LinkId id : path.links) grids_[id.value].release(range);
}

bool NetworkState::empty() const {
  for (const auto& g : grids_)
    if (g.used_count() != 0) return false;
  return true;
}

std::size_t provisional_slots(const NetworkState& state, const Demand& demand) {
  const double km = state.shortest_length_km(demand.source, demand.destination);
  const auto mod = select_modulation(km);
  return required_slots(demand.bitrate_gbps, mod ? *mod : kModulationFormats.front());
}

std::vector<double> link_weights(const NetworkState& state, const CostSpec& spec,
                                 const Demand& demand) {
  const std::size_t n_links = state.topology().num_links();
  std::vector<double> weights(n_links);
  const std::size_t needed =
      spec.metric == Metric::LLP ? provisional_slots(state, demand) : std::size_t{1};
  for (std::uint32_t i = 0; i < n_links; ++i) {
    const LinkId id{i};
    const SpectrumGrid& g = state.grid(id);
    const double u = spec.is_dynamic() ? usage(g) : 0.0;
    const double p = spec.metric == Metric::LLP ? accommodation_probability(g, needed) : 1.0;
    weights[i] = link_cost(spec, state.normalized_length(id), u, p);
  }
  return weights;
}

Admission try_admit(NetworkState& state, const CostSpec& spec, const Demand& demand) {
  if (demand.source == demand.destination) throw InternalError("demand with source == destination");
  if (demand.bitrate_gbps < kMinBitrateGbps || demand.bitrate_gbps > kMaxBitrateGbps)
    throw InternalError("demand bitrate outside 1..50 Gb/s");

  const auto weights = link_weights(state, spec, demand);
  auto path = shortest_path(state.topology(), weights, demand.source, demand.destination);
  if (!path) throw InternalError("destination unreachable on a connected topology");

  Admission result;
  result.path = std::move(*path);
  result.modulation = select_modulation(result.path.total_length_km);
  if (!result.modulation) {
    result.block = BlockReason::Distance;
    return result;
  }

  const std::size_t needed = required_slots(demand.bitrate_gbps, *result.modulation);
  std::vector<const SpectrumGrid*> grids;
  grids.reserve(result.path.links.size());
  for (LinkId id : result.path.links) grids.push_back(&state.grid(id));
  const auto range = first_fit(grids, needed);
  if (!range) {
    result.block = BlockReason::Spectrum;
    return result;
  }

  state.allocate(result.path, *range);
  result.connection = Connection{demand.id, result.path, *result.modulation, *range,
                                 needed - kGuardBandSlots, demand.departure_time()};
  return result;
}

}  // namespace eonsim
