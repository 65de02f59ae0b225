#include "eonsim/routing.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>

#include "eonsim/errors.hpp"

namespace eonsim {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Label {
  double cost;
  std::uint32_t node;

  bool operator>(const Label& o) const {
    return cost != o.cost ? cost > o.cost : node > o.node;
  }
};

}  // namespace

std::optional<Path> shortest_path(const Topology& topology, std::span<const double> weights,
                                  NodeId src, NodeId dst) {
  const std::size_t n = topology.num_nodes();
  if (weights.size() != topology.num_links())
    throw InternalError("weight vector size does not match link count");
  if (src.value >= n || dst.value >= n) throw InternalError("endpoint out of range");
  if (src == dst) throw InternalError("shortest_path with src == dst");
  for (double w : weights)
    if (!(w > 0.0)) throw InternalError("non-positive link weight");

  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<std::uint32_t> pred_node(n, kNone);
  std::vector<std::uint32_t> pred_link(n, kNone);
  std::vector<bool> settled(n, false);
  std::priority_queue<Label, std::vector<Label>, std::greater<>> queue;

  dist[src.value] = 0.0;
  queue.push({0.0, src.value});
  while (!queue.empty()) {
    Label top = queue.top();
    queue.pop();
    if (settled[top.node]) continue;
    settled[top.node] = true;
    if (top.node == dst.value) break;

    const NodeId u{top.node};
    for (LinkId lid : topology.incident(u)) {
      const std::uint32_t v = topology.link(lid).other(u).value;
      if (settled[v]) continue;
      const double cand = top.cost + weights[lid.value];
      if (cand < dist[v]) {
        dist[v] = cand;
        pred_node[v] = u.value;
        pred_link[v] = lid.value;
        queue.push({cand, v});
      } else if (cand == dist[v] && u.value < pred_node[v]) {
        pred_node[v] = u.value;
        pred_link[v] = lid.value;
      }
    }
  }

  if (!settled[dst.value]) return std::nullopt;

  Path path;
  path.total_cost = dist[dst.value];
  for (std::uint32_t v = dst.value; v != src.value; v = pred_node[v]) {
    path.nodes.push_back(NodeId{v});
    path.links.push_back(LinkId{pred_link[v]});
  }
  path.nodes.push_back(src);
  std::reverse(path.nodes.begin(), path.nodes.end());
  std::reverse(path.links.begin(), path.links.end());
  for (LinkId lid : path.links) path.total_length_km += topology.link(lid).length_km;
  return path;
}

std::vector<double> all_pairs_shortest_length_km(const Topology& topology) {
  const std::size_t n = topology.num_nodes();
  std::vector<double> lengths(topology.num_links());
  for (const Link& l : topology.links()) lengths[l.id.value] = l.length_km;

  std::vector<double> out(n * n, 0.0);
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t d = 0; d < n; ++d) {
      if (s == d) continue;
      auto p = shortest_path(topology, lengths, NodeId{s}, NodeId{d});
      out[s * n + d] = p ? p->total_length_km : std::numeric_limits<double>::infinity();
    }
  }
  return out;
}

}  // namespace eonsim
