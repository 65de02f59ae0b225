#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eonsim/topology.hpp"

namespace eonsim {

struct Path {
  std::vector<NodeId> nodes;
  std::vector<LinkId> links;  // links[i] joins nodes[i] and nodes[i + 1]
  double total_length_km = 0.0;
  double total_cost = 0.0;

  std::size_t hops() const { return links.size(); }
  bool operator==(const Path&) const = default;
};

// Dijkstra over per-link weights (indexed by LinkId, all strictly positive).
//
// Ties are broken deterministically: the queue is ordered by (cost, node
// index), and when two predecessors give the same tentative cost the lower
// predecessor index wins. Returns nullopt only if dst is unreachable.
// Throws InternalError if src == dst, a weight is not positive, or the
// weight vector does not match the topology.
std::optional<Path> shortest_path(const Topology& topology, std::span<const double> weights,
                                  NodeId src, NodeId dst);

// Sum of link lengths along the shortest-by-length path, for every ordered
// pair. Entry [s * N + d]; zero on the diagonal.
std::vector<double> all_pairs_shortest_length_km(const Topology& topology);

}  // namespace eonsim
