#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eonsim {

// Dense node index 0..N-1.
struct NodeId {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const NodeId&) const = default;
};

struct LinkId {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const LinkId&) const = default;
};

// Bidirectional fiber link. Endpoints are stored with a < b.
struct Link {
  LinkId id;
  NodeId a;
  NodeId b;
  double length_km = 0.0;

  NodeId other(NodeId n) const { return n == a ? b : a; }
  bool has(NodeId n) const { return n == a || n == b; }

  bool operator==(const Link&) const = default;
};

class Topology {
 public:
  // Validates and takes ownership of the links. Throws ValidationError on
  // self-loops, duplicate node pairs, non-positive lengths, out-of-range
  // endpoints, non-dense link ids or a disconnected graph.
  Topology(std::string name, std::size_t num_nodes, std::vector<Link> links);

  const std::string& name() const { return name_; }
  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_links() const { return links_.size(); }
  const std::vector<Link>& links() const { return links_; }
  const Link& link(LinkId id) const { return links_.at(id.value); }
  double max_link_length_km() const { return max_length_km_; }

  // Links touching `node`, ordered by link id.
  const std::vector<LinkId>& incident(NodeId node) const {
    return incident_.at(node.value);
  }
  std::size_t degree(NodeId node) const { return incident(node).size(); }

  std::optional<LinkId> find_link(NodeId x, NodeId y) const;

  bool operator==(const Topology& other) const;

 private:
  std::string name_;
  std::size_t num_nodes_;
  std::vector<Link> links_;
  std::vector<std::vector<LinkId>> incident_;
  double max_length_km_ = 0.0;
};

// Parses the line-oriented topology format:
//
//   # comment
//   NODES <N>
//   LINK <id> <nodeA> <nodeB> <length_km>
//
// Throws ParseError on syntax problems and ValidationError on model
// violations.
Topology parse_topology(std::string_view text, std::string name);

// Reads and parses a topology file; the topology is named after the file
// stem ("nsfnet.topo" -> "nsfnet").
Topology load_topology(const std::filesystem::path& path);

// Canonical text form (same format as the input). Lengths are written in
// shortest round-trip form so parse(serialize(t)) == t.
std::string serialize_topology(const Topology& topology);

// length_km / max_link_length_km, in (0, 1].
double normalized_length(const Topology& topology, const Link& link);

std::vector<Link> incident_links(const Topology& topology, NodeId node);

}  // namespace eonsim
