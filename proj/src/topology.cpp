#include "eonsim/topology.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "eonsim/errors.hpp"
#include "eonsim/format.hpp"

namespace eonsim {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Topology::Topology(std::string name, std::size_t num_nodes, std::vector<Link> links)
    : name_(std::move(name)), num_nodes_(num_nodes), links_(std::move(links)) {
  if (num_nodes_ < 2) throw ValidationError("topology needs at least 2 nodes");
  if (links_.empty()) throw ValidationError("topology has no links");

  std::sort(links_.begin(), links_.end(),
            [](const Link& x, const Link& y) { return x.id < y.id; });

  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  incident_.assign(num_nodes_, {});
  for (std::size_t i = 0; i < links_.size(); ++i) {
    Link& l = links_[i];
    if (l.id.value != i)
      throw ValidationError("link ids must be dense 0..L-1 (missing or duplicate id " +
                            std::to_string(i) + ")");
    if (l.a.value >= num_nodes_ || l.b.value >= num_nodes_)
      throw ValidationError("link " + std::to_string(i) + " references an unknown node");
    if (l.a == l.b) throw ValidationError("link " + std::to_string(i) + " is a self-loop");
    if (!(l.length_km > 0.0) || !std::isfinite(l.length_km))
      throw ValidationError("link " + std::to_string(i) + " must have positive length");
    if (l.b < l.a) std::swap(l.a, l.b);
    if (!pairs.emplace(l.a.value, l.b.value).second)
      throw ValidationError("duplicate link between nodes " + std::to_string(l.a.value) +
                            " and " + std::to_string(l.b.value));
    incident_[l.a.value].push_back(l.id);
    incident_[l.b.value].push_back(l.id);
    max_length_km_ = std::max(max_length_km_, l.length_km);
  }

  // Connectivity via union-find.
  std::vector<std::size_t> parent(num_nodes_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = num_nodes_;
  for (const Link& l : links_) {
    auto ra = find(l.a.value), rb = find(l.b.value);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  if (components != 1) throw ValidationError("topology is not connected");
}

std::optional<LinkId> Topology::find_link(NodeId x, NodeId y) const {
  if (x.value >= num_nodes_) return std::nullopt;
  for (LinkId id : incident_[x.value]) {
    if (links_[id.value].other(x) == y) return id;
  }
  return std::nullopt;
}

bool Topology::operator==(const Topology& other) const {
  return name_ == other.name_ && num_nodes_ == other.num_nodes_ && links_ == other.links_;
}

Topology parse_topology(std::string_view text, std::string name) {
  std::optional<std::size_t> num_nodes;
  std::vector<Link> links;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (tok[0] == "NODES") {
      if (tok.size() != 2) parse_fail(line_no, "expected 'NODES <N>'");
      if (num_nodes) parse_fail(line_no, "duplicate NODES line");
      auto n = parse_number<std::size_t>(tok[1]);
      if (!n) parse_fail(line_no, "bad node count '" + std::string(tok[1]) + "'");
      num_nodes = *n;
    } else if (tok[0] == "LINK") {
      if (tok.size() != 5) parse_fail(line_no, "expected 'LINK <id> <nodeA> <nodeB> <length_km>'");
      if (!num_nodes) parse_fail(line_no, "LINK before NODES");
      auto id = parse_number<std::uint32_t>(tok[1]);
      auto a = parse_number<std::uint32_t>(tok[2]);
      auto b = parse_number<std::uint32_t>(tok[3]);
      auto len = parse_number<double>(tok[4]);
      if (!id || !a || !b || !len) parse_fail(line_no, "malformed LINK fields");
      links.push_back(Link{LinkId{*id}, NodeId{*a}, NodeId{*b}, *len});
    } else {
      parse_fail(line_no, "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
  if (!num_nodes) throw ParseError("missing NODES line");
  return Topology(std::move(name), *num_nodes, std::move(links));
}

Topology load_topology(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open topology file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_topology(ss.str(), path.stem().string());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::string serialize_topology(const Topology& topology) {
  std::string out = "# " + topology.name() + "\n";
  out += "NODES " + std::to_string(topology.num_nodes()) + "\n";
  for (const Link& l : topology.links()) {
    out += "LINK " + std::to_string(l.id.value) + " " + std::to_string(l.a.value) + " " +
           std::to_string(l.b.value) + " " + format_double(l.length_km) + "\n";
  }
  return out;
}

double normalized_length(const Topology& topology, const Link& link) {
  return link.length_km / topology.max_link_length_km();
}

std::vector<Link> incident_links(const Topology& topology, NodeId node) {
  std::vector<Link> out;
  for (LinkId id : topology.incident(node)) out.push_back(topology.link(id));
  return out;
}

}  // namespace eonsim
