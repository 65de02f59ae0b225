#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace eonsim {

// Link-cost metrics.
//   LL  - normalized link length (static)
//   U   - unity, every link costs 1 (static)
//   LLU - length plus a usage term (dynamic)
//   LLP - length plus an accommodation-probability term (dynamic)
enum class Metric { LL, U, LLU, LLP };

// How the dynamic term x in [0, 1] enters the cost: alpha * f(x).
enum class Merge { Linear, Quadratic, Sqrt };

struct CostSpec {
  Metric metric = Metric::LL;
  Merge merge = Merge::Linear;
  double alpha = 1.0;
  // LLP only: use p + alpha * f(u) instead of L + alpha * f(1 - p).
  bool llp_literal = false;

  bool is_dynamic() const { return metric == Metric::LLU || metric == Metric::LLP; }
  bool operator==(const CostSpec&) const = default;
};

std::string_view to_string(Metric metric);
std::string_view to_string(Merge merge);
std::optional<Metric> parse_metric(std::string_view text);
std::optional<Merge> parse_merge(std::string_view text);

// Label used in result tables ("LLP-literal" for the literal LLP variant).
std::string metric_label(const CostSpec& spec);

double merge_term(Merge merge, double x);

// Edge weight for one link.
//   normalized_length in (0, 1], link_usage in [0, 1], accommodation in [0, 1].
// Throws InternalError on out-of-range inputs or negative alpha.
double link_cost(const CostSpec& spec, double normalized_length, double link_usage,
                 double accommodation);

}  // namespace eonsim
