#include "eonsim/spectrum.hpp"

#include <string>

#include "eonsim/errors.hpp"

namespace eonsim {

SpectrumGrid::SpectrumGrid(std::size_t total_slots) : occupied_(total_slots, false) {
  if (total_slots == 0) throw ValidationError("spectrum grid needs at least one slot");
}

void SpectrumGrid::check_bounds(SlotRange range) const {
  if (range.count == 0 || range.end() > occupied_.size())
    throw InternalError("slot range [" + std::to_string(range.start) + ", " +
                        std::to_string(range.end()) + ") does not fit a grid of " +
                        std::to_string(occupied_.size()) + " slots");
}

bool SpectrumGrid::is_free(SlotRange range) const {
  if (range.count == 0 || range.end() > occupied_.size()) return false;
  for (std::size_t s = range.start; s < range.end(); ++s)
    if (occupied_[s]) return false;
  return true;
}

void SpectrumGrid::allocate(SlotRange range) {
  check_bounds(range);
  for (std::size_t s = range.start; s < range.end(); ++s)
    if (occupied_[s]) throw InternalError("double allocation of slot " + std::to_string(s));
  for (std::size_t s = range.start; s < range.end(); ++s) occupied_[s] = true;
  used_ += range.count;
}

void SpectrumGrid::release(SlotRange range) {
  check_bounds(range);
  for (std::size_t s = range.start; s < range.end(); ++s)
    if (!occupied_[s]) throw InternalError("release of free slot " + std::to_string(s));
  for (std::size_t s = range.start; s < range.end(); ++s) occupied_[s] = false;
  used_ -= range.count;
}

double usage(const SpectrumGrid& grid) {
  return static_cast<double>(grid.used_count()) / static_cast<double>(grid.total_slots());
}

std::size_t accommodable_slots(const SpectrumGrid& grid, std::size_t needed_slots) {
  const auto& bits = grid.bits();
  std::size_t total = 0;
  std::size_t run = 0;
  for (std::size_t s = 0; s <= bits.size(); ++s) {
    if (s < bits.size() && !bits[s]) {
      ++run;
      continue;
    }
    if (run >= needed_slots) total += run;
    run = 0;
  }
  return total;
}

double accommodation_probability(const SpectrumGrid& grid, std::size_t needed_slots) {
  if (needed_slots == 0) throw InternalError("needed_slots must be at least 1");
  // Written as 1 - unusable/total so that n = 1 reproduces 1 - usage bit for bit.
  const std::size_t unusable = grid.total_slots() - accommodable_slots(grid, needed_slots);
  return 1.0 - static_cast<double>(unusable) / static_cast<double>(grid.total_slots());
}

namespace {

template <typename GridAt>
std::optional<SlotRange> first_fit_impl(std::size_t n_grids, GridAt grid_at,
                                        std::size_t needed_slots) {
  if (needed_slots == 0) throw InternalError("needed_slots must be at least 1");
  if (n_grids == 0) return std::nullopt;
  const std::size_t total = grid_at(0).total_slots();
  for (std::size_t g = 1; g < n_grids; ++g)
    if (grid_at(g).total_slots() != total)
      throw InternalError("first_fit over grids of different sizes");

  // Sliding run of slots free on every grid.
  std::size_t run = 0;
  for (std::size_t s = 0; s < total; ++s) {
    bool free = true;
    for (std::size_t g = 0; g < n_grids && free; ++g) free = !grid_at(g).bits()[s];
    run = free ? run + 1 : 0;
    if (run == needed_slots) return SlotRange{s + 1 - needed_slots, needed_slots};
  }
  return std::nullopt;
}

}  // namespace

std::optional<SlotRange> first_fit(std::span<const SpectrumGrid* const> grids,
                                   std::size_t needed_slots) {
  return first_fit_impl(
      grids.size(), [&](std::size_t i) -> const SpectrumGrid& { return *grids[i]; },
      needed_slots);
}

std::optional<SlotRange> first_fit(std::span<const SpectrumGrid> grids,
                                   std::size_t needed_slots) {
  return first_fit_impl(
      grids.size(), [&](std::size_t i) -> const SpectrumGrid& { return grids[i]; },
      needed_slots);
}

}  // namespace eonsim
