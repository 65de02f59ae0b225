#include "eonsim/cost.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "eonsim/errors.hpp"

namespace eonsim {

namespace {

constexpr double kMinLiteralCost = 1e-9;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::LL: return "LL";
    case Metric::U: return "U";
    case Metric::LLU: return "LLU";
    case Metric::LLP: return "LLP";
  }
  return "?";
}

std::string_view to_string(Merge merge) {
  switch (merge) {
    case Merge::Linear: return "linear";
    case Merge::Quadratic: return "quadratic";
    case Merge::Sqrt: return "sqrt";
  }
  return "?";
}

std::optional<Metric> parse_metric(std::string_view text) {
  auto s = lower(text);
  if (s == "ll") return Metric::LL;
  if (s == "u") return Metric::U;
  if (s == "llu") return Metric::LLU;
  if (s == "llp") return Metric::LLP;
  return std::nullopt;
}

std::optional<Merge> parse_merge(std::string_view text) {
  auto s = lower(text);
  if (s == "linear") return Merge::Linear;
  if (s == "quadratic") return Merge::Quadratic;
  if (s == "sqrt") return Merge::Sqrt;
  return std::nullopt;
}

std::string metric_label(const CostSpec& spec) {
  std::string label(to_string(spec.metric));
  if (spec.metric == Metric::LLP && spec.llp_literal) label += "-literal";
  return label;
}

double merge_term(Merge merge, double x) {
  switch (merge) {
    case Merge::Linear: return x;
    case Merge::Quadratic: return x * x;
    case Merge::Sqrt: return std::sqrt(x);
  }
  return x;
}

double link_cost(const CostSpec& spec, double normalized_length, double link_usage,
                 double accommodation) {
  if (!(normalized_length > 0.0 && normalized_length <= 1.0))
    throw InternalError("normalized length out of (0, 1]");
  if (!(link_usage >= 0.0 && link_usage <= 1.0)) throw InternalError("usage out of [0, 1]");
  if (!(accommodation >= 0.0 && accommodation <= 1.0))
    throw InternalError("accommodation probability out of [0, 1]");
  if (!(spec.alpha >= 0.0)) throw InternalError("alpha must be >= 0");

  switch (spec.metric) {
    case Metric::LL:
      return normalized_length;
    case Metric::U:
      return 1.0;
    case Metric::LLU:
      return normalized_length + spec.alpha * merge_term(spec.merge, link_usage);
    case Metric::LLP:
      if (spec.llp_literal) {
        // p can be 0 on a fragmented link; keep the weight strictly positive.
        return std::max(kMinLiteralCost,
                        accommodation + spec.alpha * merge_term(spec.merge, link_usage));
      }
      return normalized_length + spec.alpha * merge_term(spec.merge, 1.0 - accommodation);
  }
  return normalized_length;
}

}  // namespace eonsim
