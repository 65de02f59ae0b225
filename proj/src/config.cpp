#include "eonsim/config.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

#include "eonsim/format.hpp"
#include "eonsim/io.hpp"

namespace eonsim {

namespace {

using json = nlohmann::json;

const std::set<std::string> kTopKeys = {"topology", "slots",   "num_demands", "warmup_demands",
                                        "output",   "outcome_log", "seeds",   "loads",
                                        "metrics"};
const std::set<std::string> kMetricKeys = {"metric", "merge", "alpha", "llp_literal"};
const std::set<std::string> kLoadKeys = {"lambda", "mu", "erlang"};

bool is_count(const json& v) { return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0); }

std::optional<double> number(const json& v) {
  if (!v.is_number()) return std::nullopt;
  return v.get<double>();
}

class Checker {
 public:
  explicit Checker(const std::filesystem::path& base) : base_(base) {}

  void fail(std::string msg) { diags_.push_back(std::move(msg)); }

  std::filesystem::path path_field(const json& obj, const char* key, bool required) {
    if (!obj.contains(key)) {
      if (required) fail(std::string("missing required key '") + key + "'");
      return {};
    }
    const auto& v = obj[key];
    if (!v.is_string() || v.get<std::string>().empty()) {
      fail(std::string("'") + key + "' must be a non-empty string");
      return {};
    }
    std::filesystem::path p = v.get<std::string>();
    return p.is_absolute() || base_.empty() ? p : base_ / p;
  }

  std::optional<std::uint64_t> count_field(const json& obj, const char* key, bool positive) {
    if (!obj.contains(key)) return std::nullopt;
    const auto& v = obj[key];
    if (!is_count(v) || (positive && v.get<std::uint64_t>() == 0)) {
      fail(std::string("'") + key + "' must be a " + (positive ? "positive" : "non-negative") +
           " integer");
      return std::nullopt;
    }
    return v.get<std::uint64_t>();
  }

  void unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& item : obj.items())
      if (!allowed.count(item.key())) fail("unknown key '" + item.key() + "' in " + where);
  }

  std::vector<std::string> take() { return std::move(diags_); }

 private:
  std::filesystem::path base_;
  std::vector<std::string> diags_;
};

std::optional<CostSpec> parse_spec(const json& m, std::size_t index, Checker& ck) {
  const std::string where = "metrics[" + std::to_string(index) + "]";
  if (!m.is_object()) {
    ck.fail(where + " must be an object");
    return std::nullopt;
  }
  ck.unknown_keys(m, kMetricKeys, where);
  bool good = true;
  CostSpec spec;
  if (!m.contains("metric") || !m["metric"].is_string()) {
    ck.fail(where + ": 'metric' must be one of LL, U, LLU, LLP");
    good = false;
  } else if (auto metric = parse_metric(m["metric"].get<std::string>())) {
    spec.metric = *metric;
  } else {
    ck.fail(where + ": unknown metric '" + m["metric"].get<std::string>() + "'");
    good = false;
  }
  if (m.contains("merge")) {
    auto merge = m["merge"].is_string() ? parse_merge(m["merge"].get<std::string>()) : std::nullopt;
    if (merge) spec.merge = *merge;
    else {
      ck.fail(where + ": 'merge' must be one of linear, quadratic, sqrt");
      good = false;
    }
  }
  if (m.contains("alpha")) {
    auto a = number(m["alpha"]);
    if (!a || !std::isfinite(*a)) {
      ck.fail(where + ": 'alpha' must be a number");
      good = false;
    } else if (*a < 0.0) {
      ck.fail(where + ": alpha must be >= 0");
      good = false;
    } else {
      spec.alpha = *a;
    }
  }
  if (m.contains("llp_literal")) {
    if (!m["llp_literal"].is_boolean()) {
      ck.fail(where + ": 'llp_literal' must be true or false");
      good = false;
    } else {
      spec.llp_literal = m["llp_literal"].get<bool>();
    }
  }
  if (!good) return std::nullopt;
  return spec;
}

std::optional<Load> parse_load(const json& l, std::size_t index, Checker& ck) {
  const std::string where = "loads[" + std::to_string(index) + "]";
  if (!l.is_object()) {
    ck.fail(where + " must be an object");
    return std::nullopt;
  }
  ck.unknown_keys(l, kLoadKeys, where);
  Load load;
  bool good = true;
  if (l.contains("lambda")) {
    auto v = number(l["lambda"]);
    if (!v || !(*v > 0.0) || !std::isfinite(*v)) {
      ck.fail(where + ": lambda must be > 0");
      good = false;
    } else {
      load.lambda = *v;
    }
  }
  const bool has_mu = l.contains("mu"), has_erlang = l.contains("erlang");
  if (has_mu == has_erlang) {
    ck.fail(where + ": give exactly one of 'mu' or 'erlang'");
    return std::nullopt;
  }
  auto v = number(has_mu ? l["mu"] : l["erlang"]);
  if (!v || !(*v > 0.0) || !std::isfinite(*v)) {
    ck.fail(where + (has_mu ? ": mu must be > 0" : ": erlang must be > 0"));
    return std::nullopt;
  }
  if (!good) return std::nullopt;
  load.mu = has_mu ? *v : load.lambda / *v;
  return load;
}

}  // namespace

ConfigCheck validate_config(std::string_view raw_text, const std::filesystem::path& base_dir) {
  ConfigCheck out;
  json doc;
  try {
    doc = json::parse(raw_text.begin(), raw_text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    out.diagnostics.push_back(std::string("config is not valid JSON: ") + e.what());
    return out;
  }
  if (!doc.is_object()) {
    out.diagnostics.push_back("config must be a JSON object");
    return out;
  }

  Checker ck(base_dir);
  ck.unknown_keys(doc, kTopKeys, "config");
  RunConfig cfg;
  cfg.topology_path = ck.path_field(doc, "topology", true);
  cfg.output_path = ck.path_field(doc, "output", true);
  if (auto v = ck.count_field(doc, "slots", true)) cfg.slots = *v;
  if (auto v = ck.count_field(doc, "num_demands", true)) cfg.num_demands = *v;
  if (auto v = ck.count_field(doc, "warmup_demands", false)) cfg.warmup_demands = *v;
  if (doc.contains("outcome_log")) {
    if (doc["outcome_log"].is_boolean()) cfg.emit_outcome_log = doc["outcome_log"].get<bool>();
    else ck.fail("'outcome_log' must be true or false");
  }
  if (cfg.warmup_demands >= cfg.num_demands)
    ck.fail("warmup_demands must be smaller than num_demands");

  if (!doc.contains("seeds") || !doc["seeds"].is_array()) {
    ck.fail("'seeds' must be a list of non-negative integers");
  } else if (doc["seeds"].empty()) {
    ck.fail("seeds list is empty");
  } else {
    for (const auto& s : doc["seeds"]) {
      if (is_count(s)) cfg.seeds.push_back(s.get<std::uint64_t>());
      else ck.fail("seed " + s.dump() + " is not a non-negative integer");
    }
  }

  if (!doc.contains("loads") || !doc["loads"].is_array()) {
    ck.fail("'loads' must be a list of {lambda, mu|erlang} objects");
  } else if (doc["loads"].empty()) {
    ck.fail("loads list is empty");
  } else {
    for (std::size_t i = 0; i < doc["loads"].size(); ++i)
      if (auto l = parse_load(doc["loads"][i], i, ck)) cfg.loads.push_back(*l);
  }

  if (!doc.contains("metrics") || !doc["metrics"].is_array()) {
    ck.fail("'metrics' must be a list of metric objects");
  } else if (doc["metrics"].empty()) {
    ck.fail("metrics list is empty");
  } else {
    for (std::size_t i = 0; i < doc["metrics"].size(); ++i)
      if (auto s = parse_spec(doc["metrics"][i], i, ck)) cfg.metrics.push_back(*s);
  }

  out.diagnostics = ck.take();
  if (out.diagnostics.empty()) out.config = std::move(cfg);
  return out;
}

ConfigCheck load_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception&) {
    ConfigCheck out;
    out.diagnostics.push_back("cannot read config file '" + path.string() + "'");
    return out;
  }
  return validate_config(text, path.parent_path());
}

std::filesystem::path outcome_log_dir(const std::filesystem::path& output_path) {
  auto dir = output_path;
  dir.replace_filename(output_path.stem().string() + "_outcomes");
  return dir;
}

std::string outcome_log_name(const SimResult& r) {
  return r.topology_name + "_" + metric_label(r.spec) + "_" + std::string(to_string(r.spec.merge)) +
         "_a" + format_double(r.spec.alpha) + "_l" + format_double(r.lambda) + "_m" +
         format_double(r.mu) + "_s" + std::to_string(r.seed) + ".csv";
}

}  // namespace eonsim
