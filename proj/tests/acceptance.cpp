// Acceptance suite: oracle checks, audited simulation invariants, and the
// qualitative orderings of the blocking / transceiver comparisons. Prints one
// PASS/FAIL line per criterion; exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "eonsim/cli.hpp"
#include "eonsim/io.hpp"
#include "eonsim/rmsa.hpp"
#include "eonsim/routing.hpp"
#include "eonsim/simengine.hpp"
#include "eonsim/spectrum.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace eonsim;
namespace fs = std::filesystem;

namespace {

// Pinned thresholds.
constexpr double kQualifyingBlocking = 0.01;  // "blocking exceeds 1%"
constexpr double kOrderingShare = 0.80;       // ordering must hold at >= 80% of points
constexpr double kOracle1Seconds = 10.0;
constexpr double kOracle2Seconds = 5.0;

// Experiment grid for the qualitative criteria.
constexpr std::uint64_t kDemands = 10000;
const std::vector<std::uint64_t> kSeeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
const std::vector<double> kErlangs{100, 200, 300, 400, 600, 800};
constexpr double kLambda = 10.0;
constexpr double kAlpha = 1.0;

struct Verdict {
  int id;
  std::string title;
  bool pass;
  std::string detail;
};

std::vector<Verdict> g_verdicts;

void report(int id, std::string title, bool pass, std::string detail) {
  std::printf("[%s] criterion %2d: %s -- %s\n", pass ? "PASS" : "FAIL", id, title.c_str(),
              detail.c_str());
  std::fflush(stdout);
  g_verdicts.push_back({id, std::move(title), pass, std::move(detail)});
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 4) {
  std::ostringstream ss;
  ss.precision(prec);
  ss << v;
  return ss.str();
}

struct Summary {
  double mean = 0.0;
  double var = 0.0;  // sample variance
  std::size_t n = 0;
};

Summary summarize_values(const std::vector<double>& xs) {
  Summary s;
  s.n = xs.size();
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(s.n);
  if (s.n > 1) {
    for (double x : xs) s.var += (x - s.mean) * (x - s.mean);
    s.var /= static_cast<double>(s.n - 1);
  }
  return s;
}

// Standard error of the difference of two independent means.
double pooled_se(const Summary& a, const Summary& b) {
  return std::sqrt(a.var / static_cast<double>(a.n) + b.var / static_cast<double>(b.n));
}

// ---------------------------------------------------------------- oracles

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240601);
  int graphs_ok = 0;
  long pairs = 0;
  for (int g = 0; g < 100; ++g) {
    const int n = 2 + static_cast<int>(rng() % 8);  // 2..9 nodes
    auto edges = oracle::random_connected_graph(rng, n, 0.3);
    auto topo = testing_support::topology_from_edges(n, edges);
    std::vector<double> w;
    for (const auto& e : edges) w.push_back(e.w);
    bool ok = true;
    for (int s = 0; s < n; ++s)
      for (int d = 0; d < n; ++d) {
        if (s == d) continue;
        ++pairs;
        auto p = shortest_path(topo, w, NodeId{(std::uint32_t)s}, NodeId{(std::uint32_t)d});
        auto best = oracle::min_simple_path_cost(n, edges, s, d);
        if (!p || !best || std::abs(p->total_cost - *best) > 1e-12 * std::max(1.0, *best)) ok = false;
      }
    graphs_ok += ok;
  }
  const double secs = seconds_since(t0);
  report(1, "Dijkstra vs simple-path enumeration", graphs_ok == 100 && secs < kOracle1Seconds,
         std::to_string(graphs_ok) + "/100 graphs exact over " + std::to_string(pairs) +
             " ordered pairs, " + fmt(secs, 3) + " s (limit 10 s)");
}

void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(77);
  long cases = 0, exact = 0, identity_ok = 0;
  for (int g = 0; g < 1000; ++g) {
    const std::size_t slots = 1 + rng() % 64;
    auto bits = oracle::random_occupancy(rng, slots, std::uniform_real_distribution<double>(0.05, 0.95)(rng));
    SpectrumGrid grid(slots);
    for (std::size_t i = 0; i < slots; ++i)
      if (bits[i]) grid.allocate({i, 1});
    for (std::size_t n = 1; n <= 8; ++n) {
      ++cases;
      // Rational equality: same numerator over the same denominator, and the
      // returned double is that rational to within one rounding.
      const std::size_t want = oracle::accommodable(bits, n);
      const double p = accommodation_probability(grid, n);
      const double rational = static_cast<double>(want) / static_cast<double>(slots);
      if (accommodable_slots(grid, n) == want && grid.total_slots() == slots &&
          std::abs(p - rational) <= 0x1.0p-52)
        ++exact;
    }
    identity_ok += accommodation_probability(grid, 1) == 1.0 - usage(grid);
  }
  const double secs = seconds_since(t0);
  report(2, "accommodation probability vs run enumeration",
         exact == cases && identity_ok == 1000 && secs < kOracle2Seconds,
         std::to_string(exact) + "/" + std::to_string(cases) + " exact, p(1) == 1-u in " +
             std::to_string(identity_ok) + "/1000 grids, " + fmt(secs, 3) + " s (limit 5 s)");
}

void criterion_3() {
  std::mt19937_64 rng(31337);
  int agree = 0, absent = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t slots = 4 + rng() % 61;
    const std::size_t k = 1 + rng() % 5;
    const double fill = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    std::vector<std::vector<bool>> bits;
    std::vector<SpectrumGrid> grids;
    for (std::size_t g = 0; g < k; ++g) {
      bits.push_back(oracle::random_occupancy(rng, slots, fill));
      SpectrumGrid grid(slots);
      for (std::size_t s = 0; s < slots; ++s)
        if (bits.back()[s]) grid.allocate({s, 1});
      grids.push_back(grid);
    }
    const std::size_t need = 1 + rng() % 8;
    auto got = first_fit(grids, need);
    auto want = oracle::first_fit_start(bits, need);
    absent += !want.has_value();
    if (got.has_value() == want.has_value() && (!got || (got->start == *want && got->count == need)))
      ++agree;
  }
  report(3, "first-fit vs exhaustive start scan", agree == 1000,
         std::to_string(agree) + "/1000 identical (" + std::to_string(absent) + " expected-absent)");
}

void criterion_4() {
  const bool spot = required_slots(40, kModulationFormats[1]) == 3;
  const int half_rates[4] = {25, 50, 75, 100};
  int match = 0;
  for (int r = 1; r <= 50; ++r)
    for (int f = 0; f < 4; ++f)
      match += required_slots(r, kModulationFormats[f]) == oracle::slots_by_integer_math(r, half_rates[f]);
  report(4, "required slots", spot && match == 200,
         std::string("(40 Gb/s, QPSK) -> ") + std::to_string(required_slots(40, kModulationFormats[1])) +
             ", " + std::to_string(match) + "/200 pairs match ceil(r/c)+1");
}

// ------------------------------------------------------ simulation invariants

void criterion_5() {
  const auto topo = load_topology(testing_support::data_dir() / "nsfnet.topo");
  int runs = 0, clean = 0;
  std::uint64_t events = 0, blocked = 0;
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto trace = generate_trace({kLambda, kLambda / 400.0, 2000, seed}, topo);
    for (Metric m : {Metric::LL, Metric::U, Metric::LLU, Metric::LLP}) {
      RunOptions opt;
      opt.audit = true;
      opt.record_outcomes = true;
      ++runs;
      try {
        auto out = run(topo, CostSpec{m, Merge::Linear, kAlpha}, trace, opt);
        const auto audit = testing_support::audit_outcomes(topo, trace, out.outcomes, kDefaultSlots);
        const auto& r = out.result;
        events += out.events_processed;
        blocked += r.blocked_total;
        if (audit.clean() && out.grids_empty_at_end && out.audits_passed == out.events_processed &&
            r.served + r.blocked_total == r.num_demands && r.num_demands == 2000)
          ++clean;
      } catch (const std::exception& e) {
        std::printf("  run failed: %s\n", e.what());
      }
    }
  }
  report(5, "audited NSFNet runs: no double booking, continuity, contiguity, empty at end",
         clean == runs,
         std::to_string(clean) + "/" + std::to_string(runs) + " runs clean, " +
             std::to_string(events) + " audited events, " + std::to_string(blocked) + " blocks");
}

void criterion_6() {
  const auto dir = fs::temp_directory_path() / "eonsim_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "run.json");
    cfg << R"({"topology": ")" << (testing_support::data_dir() / "nsfnet.topo").string() << R"(",
      "output": "results.csv", "num_demands": 2000, "outcome_log": true,
      "seeds": [1, 2, 3], "loads": [{"erlang": 400}],
      "metrics": [{"metric": "LL"}, {"metric": "U"}, {"metric": "LLU"}, {"metric": "LLP"}]})";
  }
  auto invoke = [&](const std::string& out, const std::string& jobs) {
    std::ostringstream o, e;
    return cli_main({"eonsim", "run", "--config", (dir / "run.json").string(), "--out",
                     (dir / out / "results.csv").string(), "--jobs", jobs, "--audit"},
                    o, e);
  };
  const int a = invoke("a", "1");
  const int b = invoke("b", "4");
  bool same = a == 0 && b == 0 && read_file(dir / "a" / "results.csv") == read_file(dir / "b" / "results.csv");
  std::size_t logs = 0;
  if (same) {
    for (const auto& entry : fs::directory_iterator(dir / "a" / "results_outcomes")) {
      ++logs;
      const auto other = dir / "b" / "results_outcomes" / entry.path().filename();
      if (!fs::exists(other) || read_file(entry.path()) != read_file(other)) same = false;
    }
  }
  report(6, "determinism of results CSV and outcome logs", same && logs == 12,
         "two invocations (1 and 4 jobs): results " + std::string(same ? "identical" : "differ") +
             ", " + std::to_string(logs) + " outcome logs compared");
}

// ------------------------------------------------------ qualitative orderings

// mean/variance per (series label, load index) for one statistic.
using SeriesTable = std::map<std::string, std::vector<Summary>>;

struct Experiment {
  std::string topology;
  SeriesTable blocking;
  SeriesTable transceivers;
};

Experiment run_experiment(const std::string& topo_file, const std::vector<CostSpec>& specs,
                          std::function<std::string(const CostSpec&)> label) {
  const auto topo = load_topology(testing_support::data_dir() / topo_file);
  std::vector<Load> loads;
  for (double e : kErlangs) loads.push_back({kLambda, kLambda / e});
  SweepOptions opt;
  opt.num_demands = kDemands;
  opt.jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto outputs = run_sweep(topo, specs, loads, kSeeds, opt);

  Experiment ex;
  ex.topology = topo.name();
  std::size_t i = 0;
  for (const auto& spec : specs) {
    auto& b = ex.blocking[label(spec)];
    auto& t = ex.transceivers[label(spec)];
    for (std::size_t l = 0; l < loads.size(); ++l) {
      std::vector<double> bp, tr;
      for (std::size_t s = 0; s < kSeeds.size(); ++s, ++i) {
        bp.push_back(outputs[i].result.blocking_probability);
        tr.push_back(outputs[i].result.transceivers_per_served);
      }
      b.push_back(summarize_values(bp));
      t.push_back(summarize_values(tr));
    }
  }
  return ex;
}

void print_table(const std::string& title, const SeriesTable& table) {
  std::printf("  %s\n  %-10s", title.c_str(), "erlang");
  for (const auto& [name, _] : table) std::printf("%12s", name.c_str());
  std::printf("\n");
  for (std::size_t l = 0; l < kErlangs.size(); ++l) {
    std::printf("  %-10g", kErlangs[l]);
    for (const auto& [_, v] : table) std::printf("%12.5f", v[l].mean);
    std::printf("\n");
  }
}

struct Share {
  int hold = 0;
  int points = 0;

  bool pass() const { return points > 0 && hold >= std::ceil(kOrderingShare * points - 1e-9); }
  std::string str() const { return std::to_string(hold) + "/" + std::to_string(points); }
};

Share blocking_ordering(const Experiment& ex) {
  Share share;
  const auto& b = ex.blocking;
  for (std::size_t l = 0; l < kErlangs.size(); ++l) {
    const double ll = b.at("LL")[l].mean, u = b.at("U")[l].mean;
    if (!(ll > kQualifyingBlocking && u > kQualifyingBlocking)) continue;
    ++share.points;
    const double best_static = std::min(ll, u);
    share.hold += b.at("LLU")[l].mean <= best_static && b.at("LLP")[l].mean <= best_static;
  }
  return share;
}

Share transceiver_ordering(const Experiment& ex) {
  Share share;
  const auto& t = ex.transceivers;
  for (std::size_t l = 0; l < kErlangs.size(); ++l) {
    ++share.points;
    const double ll = t.at("LL")[l].mean;
    share.hold += t.at("LLU")[l].mean >= ll && t.at("LLP")[l].mean >= ll;
  }
  return share;
}

// Adjacent load points whose mean drops by more than one pooled SE.
int monotonicity_violations(const SeriesTable& table, std::string* where) {
  int bad = 0;
  for (const auto& [name, v] : table)
    for (std::size_t l = 0; l + 1 < v.size(); ++l)
      if (v[l + 1].mean < v[l].mean && v[l].mean - v[l + 1].mean > pooled_se(v[l], v[l + 1])) {
        ++bad;
        *where += " " + name + "@" + fmt(kErlangs[l + 1]);
      }
  return bad;
}

}  // namespace

int main() {
  std::printf("eonsim acceptance suite\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();

  const std::vector<CostSpec> metrics{{Metric::LL, Merge::Linear, kAlpha},
                                      {Metric::U, Merge::Linear, kAlpha},
                                      {Metric::LLU, Merge::Linear, kAlpha},
                                      {Metric::LLP, Merge::Linear, kAlpha}};
  auto by_metric = [](const CostSpec& s) { return metric_label(s); };
  auto by_merge = [](const CostSpec& s) { return std::string(to_string(s.merge)); };

  std::printf("running metric sweeps: %zu seeds x %zu loads x %llu demands\n", kSeeds.size(),
              kErlangs.size(), static_cast<unsigned long long>(kDemands));
  const auto t0 = std::chrono::steady_clock::now();
  const Experiment nsf = run_experiment("nsfnet.topo", metrics, by_metric);
  const Experiment usb = run_experiment("usbackbone.topo", metrics, by_metric);
  const std::vector<CostSpec> merges{{Metric::LLU, Merge::Linear, kAlpha},
                                     {Metric::LLU, Merge::Quadratic, kAlpha},
                                     {Metric::LLU, Merge::Sqrt, kAlpha}};
  const Experiment merge = run_experiment("usbackbone.topo", merges, by_merge);
  std::printf("sweeps done in %.1f s\n", seconds_since(t0));
  for (const Experiment* ex : {&nsf, &usb}) {
    print_table(ex->topology + " mean blocking probability", ex->blocking);
    print_table(ex->topology + " mean transceivers per served demand", ex->transceivers);
  }
  print_table("usbackbone LLU mean blocking probability by merge function", merge.blocking);

  {
    const Share a = blocking_ordering(nsf), b = blocking_ordering(usb);
    report(7, "dynamic metrics block less than both static metrics", a.pass() && b.pass(),
           "nsfnet " + a.str() + ", usbackbone " + b.str() + " qualifying load points (need >= 80%)");
  }
  {
    const Share a = transceiver_ordering(nsf), b = transceiver_ordering(usb);
    report(8, "dynamic metrics use more transceivers per served demand than LL",
           a.pass() && b.pass(),
           "nsfnet " + a.str() + ", usbackbone " + b.str() + " load points (need >= 80%)");
  }
  {
    Share lin_sqrt;
    int quad_ok = 0, quad_points = 0;
    std::string quad_detail;
    const auto& b = merge.blocking;
    for (std::size_t l = 0; l < kErlangs.size(); ++l) {
      const Summary &lin = b.at("linear")[l], &quad = b.at("quadratic")[l], &sq = b.at("sqrt")[l];
      if (!(lin.mean > kQualifyingBlocking && quad.mean > kQualifyingBlocking &&
            sq.mean > kQualifyingBlocking))
        continue;
      ++lin_sqrt.points;
      lin_sqrt.hold += lin.mean <= sq.mean;
      ++quad_points;
      const bool between = std::min(lin.mean, sq.mean) <= quad.mean && quad.mean <= std::max(lin.mean, sq.mean);
      const bool near = std::abs(quad.mean - lin.mean) <= pooled_se(quad, lin) ||
                        std::abs(quad.mean - sq.mean) <= pooled_se(quad, sq);
      if (between || near) ++quad_ok;
      else quad_detail += " miss@" + fmt(kErlangs[l]);
    }
    report(9, "merge functions: linear <= sqrt, quadratic between or within one SE",
           lin_sqrt.pass() && quad_ok == quad_points,
           "linear<=sqrt at " + lin_sqrt.str() + " qualifying points; quadratic ok at " +
               std::to_string(quad_ok) + "/" + std::to_string(quad_points) + quad_detail);
  }
  {
    std::string where;
    const int bad = monotonicity_violations(nsf.blocking, &where) +
                    monotonicity_violations(usb.blocking, &where) +
                    monotonicity_violations(merge.blocking, &where);
    report(10, "blocking non-decreasing in load (within one pooled SE)", bad == 0,
           std::to_string(bad) + " violations across 11 series" + where);
  }

  const auto failed = std::count_if(g_verdicts.begin(), g_verdicts.end(), [](const Verdict& v) { return !v.pass; });
  std::printf("%zu/%zu criteria passed\n", g_verdicts.size() - failed, g_verdicts.size());
  return failed == 0 ? 0 : 1;
}
