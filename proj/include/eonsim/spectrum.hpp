#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace eonsim {

inline constexpr std::size_t kDefaultSlots = 180;

// Contiguous block of frequency slots [start, start + count).
struct SlotRange {
  std::size_t start = 0;
  std::size_t count = 0;

  std::size_t end() const { return start + count; }
  bool operator==(const SlotRange&) const = default;
};

// Occupancy of one link's frequency slots. Both directions of a
// bidirectional link share the same grid.
class SpectrumGrid {
 public:
  explicit SpectrumGrid(std::size_t total_slots = kDefaultSlots);

  std::size_t total_slots() const { return occupied_.size(); }
  std::size_t used_count() const { return used_; }
  bool is_occupied(std::size_t slot) const { return occupied_.at(slot); }
  bool is_free(SlotRange range) const;

  // Throws InternalError if any slot in range is already occupied (or the
  // range does not fit); the grid is left unchanged in that case.
  void allocate(SlotRange range);
  // Throws InternalError if any slot in range is already free.
  void release(SlotRange range);

  const std::vector<bool>& bits() const { return occupied_; }

  bool operator==(const SpectrumGrid&) const = default;

 private:
  void check_bounds(SlotRange range) const;

  std::vector<bool> occupied_;
  std::size_t used_ = 0;
};

// Fraction of slots in use.
double usage(const SpectrumGrid& grid);

// Fraction of slots that are free and lie in a maximal free run of at least
// `needed_slots` slots. accommodation_probability(g, 1) == 1 - usage(g).
double accommodation_probability(const SpectrumGrid& grid, std::size_t needed_slots);

// Numerator of accommodation_probability (slot count), exact.
std::size_t accommodable_slots(const SpectrumGrid& grid, std::size_t needed_slots);

// Lowest-start range of `needed_slots` slots free on every grid. Grids must
// share the same size.
std::optional<SlotRange> first_fit(std::span<const SpectrumGrid* const> grids,
                                   std::size_t needed_slots);
std::optional<SlotRange> first_fit(std::span<const SpectrumGrid> grids,
                                   std::size_t needed_slots);

}  // namespace eonsim
