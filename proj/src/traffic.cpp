#include "eonsim/traffic.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "eonsim/errors.hpp"
#include "eonsim/format.hpp"
#include "eonsim/io.hpp"
#include "eonsim/random.hpp"

namespace eonsim {

namespace {

constexpr std::string_view kTraceHeader =
    "id,arrival_time,source,destination,bitrate_gbps,holding_time";

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    auto c = line.find(',', pos);
    if (c == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, c - pos));
    pos = c + 1;
  }
}

}  // namespace

std::vector<Demand> generate_trace(const TrafficConfig& config, const Topology& topology) {
  if (!(config.lambda > 0.0) || !(config.mu > 0.0))
    throw ValidationError("lambda and mu must be positive");
  const std::uint64_t n = topology.num_nodes();
  if (n < 2) throw ValidationError("trace generation needs at least 2 nodes");

  auto streams = TraceStreams::from_seed(config.seed);
  std::vector<Demand> trace;
  trace.reserve(config.num_demands);
  double now = 0.0;
  for (std::uint64_t i = 0; i < config.num_demands; ++i) {
    double next = now + streams.arrivals.exponential(config.lambda);
    if (!(next > now)) next = std::nextafter(now, INFINITY);
    now = next;

    Demand d;
    d.id = i;
    d.arrival_time = now;
    d.holding_time = streams.holding.exponential(config.mu);

    const std::uint64_t pair = streams.attributes.below(n * (n - 1));
    const std::uint64_t src = pair / (n - 1);
    std::uint64_t dst = pair % (n - 1);
    if (dst >= src) ++dst;
    d.source = NodeId{static_cast<std::uint32_t>(src)};
    d.destination = NodeId{static_cast<std::uint32_t>(dst)};
    d.bitrate_gbps = kMinBitrateGbps +
                     static_cast<int>(streams.attributes.below(kMaxBitrateGbps - kMinBitrateGbps + 1));
    trace.push_back(d);
  }
  return trace;
}

void validate_trace(const std::vector<Demand>& trace, const Topology& topology) {
  double prev = -1.0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const Demand& d = trace[i];
    auto fail = [&](const std::string& what) {
      throw ValidationError("demand " + std::to_string(d.id) + ": " + what);
    };
    if (d.id != i) fail("ids must be sequential from 0");
    if (!(d.arrival_time >= 0.0) || !(d.arrival_time > prev))
      fail("arrival times must be non-negative and strictly increasing");
    if (d.source.value >= topology.num_nodes() || d.destination.value >= topology.num_nodes())
      fail("endpoint not in topology");
    if (d.source == d.destination) fail("source equals destination");
    if (d.bitrate_gbps < kMinBitrateGbps || d.bitrate_gbps > kMaxBitrateGbps)
      fail("bitrate outside 1..50 Gb/s");
    if (!(d.holding_time > 0.0) || !std::isfinite(d.holding_time))
      fail("holding time must be positive");
    prev = d.arrival_time;
  }
}

std::string trace_to_csv(const std::vector<Demand>& trace) {
  std::string out(kTraceHeader);
  out += '\n';
  for (const Demand& d : trace) {
    out += std::to_string(d.id) + ',' + format_double(d.arrival_time) + ',' +
           std::to_string(d.source.value) + ',' + std::to_string(d.destination.value) + ',' +
           std::to_string(d.bitrate_gbps) + ',' + format_double(d.holding_time) + '\n';
  }
  return out;
}

std::vector<Demand> trace_from_csv(std::string_view text) {
  std::vector<Demand> trace;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kTraceHeader) throw ParseError("trace CSV: unexpected header '" + std::string(line) + "'");
      header_seen = true;
      continue;
    }
    auto f = split_commas(line);
    auto fail = [&] { throw ParseError("trace CSV line " + std::to_string(line_no) + ": malformed row"); };
    if (f.size() != 6) fail();
    auto id = parse_number<std::uint64_t>(f[0]);
    auto at = parse_number<double>(f[1]);
    auto src = parse_number<std::uint32_t>(f[2]);
    auto dst = parse_number<std::uint32_t>(f[3]);
    auto rate = parse_number<int>(f[4]);
    auto hold = parse_number<double>(f[5]);
    if (!id || !at || !src || !dst || !rate || !hold) fail();
    trace.push_back(Demand{*id, *at, NodeId{*src}, NodeId{*dst}, *rate, *hold});
  }
  if (!header_seen) throw ParseError("trace CSV: empty input");
  return trace;
}

void write_trace_csv(const std::filesystem::path& path, const std::vector<Demand>& trace) {
  write_file_atomic(path, trace_to_csv(trace));
}

std::vector<Demand> read_trace_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open trace file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return trace_from_csv(ss.str());
}

}  // namespace eonsim
