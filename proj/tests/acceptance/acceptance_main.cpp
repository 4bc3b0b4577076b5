// Acceptance gate. One invocation checks one criterion and prints
//   criterion N: PASS|FAIL <summary>
// followed by indented detail lines. Exit status 0 on PASS, 1 on FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "linkpred/benchmark.hpp"
#include "linkpred/experiment.hpp"
#include "linkpred/generators.hpp"
#include "linkpred/interaction_index.hpp"
#include "linkpred/metrics.hpp"
#include "linkpred/neighborhood.hpp"
#include "linkpred/sampling.hpp"
#include "linkpred/semivalue.hpp"
#include "linkpred/verify.hpp"

namespace {

using namespace linkpred;
using Clock = std::chrono::steady_clock;

// Tolerances and budgets.
constexpr double kOracleTolerance = 1e-9;
constexpr double kOracleBudgetSeconds = 600.0;
constexpr std::size_t kOracleMaxNodes = 8;
constexpr double kCoincidenceTolerance = 1e-9;
constexpr std::size_t kCoincidenceGraphs = 100;
constexpr std::size_t kCoincidenceMaxNodes = 200;
constexpr double kAucTolerancePoints = 3.0;
constexpr double kGapPoints = 15.0;
constexpr double kPrecisionTolerancePoints = 4.0;
constexpr double kTableBudgetSeconds = 1800.0;
constexpr std::size_t kTrials = 1000;
constexpr double kRemovalFraction = 0.30;
constexpr std::uint64_t kMasterSeed = 1;
constexpr std::size_t kMetricFixtures = 1000;
constexpr std::size_t kMetricMaxCandidates = 200;
constexpr std::size_t kPrecisionFixtures = 60;
constexpr std::size_t kMonteCarloDraws = 10000;
constexpr double kMonteCarloTolerance = 0.01;
constexpr double kBallRelativeTolerance = 0.10;
constexpr double kMaxGrowthRatio = 4.0;
constexpr std::size_t kBenchRepeats = 20;
constexpr std::size_t kBenchRuns = 9;
constexpr double kThreadTolerance = 1e-9;

struct Outcome {
  bool passed = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(const std::string& why) {
    passed = false;
    details.push_back("FAIL " + why);
  }
  void note(const std::string& what) { details.push_back(what); }
};

std::string fixed(double x, int digits = 3) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << x;
  return out.str();
}

std::string sci(double x) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(2) << x;
  return out.str();
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Dataset {
  std::string name;
  std::string path;
  Graph graph;
  std::string checksum;
};

std::optional<Dataset> load_dataset(const std::string& name, const std::string& data_dir, Outcome& out) {
  const std::string path = resolve_dataset_path(name, data_dir);
  if (!std::filesystem::exists(path)) {
    out.fail(name + ": dataset not found at " + path);
    return std::nullopt;
  }
  Dataset d{name, path, load_edge_list_file(path).graph, {}};
  d.checksum = graph_checksum(d.graph);
  out.note(name + ": " + path + " nodes=" + std::to_string(d.graph.node_count()) +
           " edges=" + std::to_string(d.graph.edge_count()) + " checksum=" + d.checksum);
  return d;
}

ExperimentReport table_protocol(const Graph& graph, const std::vector<MethodSpec>& methods) {
  ExperimentConfig config;
  config.methods = methods;
  config.removal_fraction = kRemovalFraction;
  config.trials = kTrials;
  config.master_seed = kMasterSeed;
  config.threads = worker_count();
  return run_experiment(graph, config);
}

MethodSpec closeness(double k) { return MethodSpec{MethodKind::shapley_closeness, k}; }
MethodSpec k_degree(double k) { return MethodSpec{MethodKind::shapley_degree, k}; }

// ---------------------------------------------------------------- 1

Outcome oracle_equivalence() {
  Outcome out;
  VerifyOptions options;
  options.max_n = kOracleMaxNodes;
  options.tolerance = kOracleTolerance;
  const auto start = Clock::now();
  std::vector<VerifyCheck> checks{verify_shapley_kernel(options), verify_semivalue_kernel(options, false),
                                  verify_semivalue_kernel(options, true)};
  const double elapsed = seconds_since(start);
  std::size_t comparisons = 0;
  double worst = 0.0;
  for (const auto& c : checks) {
    comparisons += c.comparisons;
    worst = std::max(worst, c.max_error);
    out.note(c.name + ": graphs=" + std::to_string(c.graphs) + " comparisons=" + std::to_string(c.comparisons) +
             " max_error=" + sci(c.max_error));
    if (!c.passed) out.fail(c.name + ": " + c.counterexample);
  }
  if (elapsed > kOracleBudgetSeconds) out.fail("sweep took " + fixed(elapsed, 1) + " s");
  out.summary = "connected graphs n<=" + std::to_string(kOracleMaxNodes) + ", 4 f, k=1..3, " +
                std::to_string(comparisons) + " comparisons, max error " + sci(worst) + " (tol " +
                sci(kOracleTolerance) + "), " + fixed(elapsed, 1) + " s";
  return out;
}

// ---------------------------------------------------------------- 2

Outcome semivalue_coincidence() {
  Outcome out;
  std::mt19937_64 sizes(20240);
  double worst = 0.0;
  std::size_t compared = 0;
  for (std::size_t g = 0; g < kCoincidenceGraphs; ++g) {
    const std::size_t n = 10 + sizes() % (kCoincidenceMaxNodes - 9);
    const std::size_t m0 = 2 + g % 4;
    const std::size_t m = 1 + g % m0;
    const Graph graph = generate_pa(n, m0, m, RandomSeed{kMasterSeed, g});
    const auto weights = shapley_weights(n);
    for (double k : {1.0, 2.0, 3.0}) {
      const auto table = NeighborhoodTable::build(graph, k);
      for (auto kind : {DistanceKind::inverse_square, DistanceKind::inverse, DistanceKind::inverse_exponential,
                        DistanceKind::indicator}) {
        const DistanceFunction f{kind, k};
        const auto shapley = shapley_closeness_all_pairs(table, f);
        const auto semivalue = semivalue_closeness_all_pairs(table, f, weights);
        if (shapley.size() != semivalue.size()) {
          out.fail("graph " + std::to_string(g) + ": stored pair counts differ");
          continue;
        }
        for (const auto& e : shapley.entries()) {
          const double err = std::abs(e.score - semivalue.score(e.pair));
          worst = std::max(worst, err);
          ++compared;
          if (err > kCoincidenceTolerance && out.passed) {
            out.fail("graph " + std::to_string(g) + " pair " + std::to_string(e.pair.u) + "-" +
                     std::to_string(e.pair.v) + " error " + sci(err));
          }
        }
      }
    }
  }
  out.summary = std::to_string(kCoincidenceGraphs) + " PA graphs (n<=" + std::to_string(kCoincidenceMaxNodes) +
                "), " + std::to_string(compared) + " pairs, max error " + sci(worst) + " (tol " +
                sci(kCoincidenceTolerance) + ")";
  return out;
}

// ---------------------------------------------------------------- 3, 4, 5

struct Target {
  const char* dataset;
  double values[3];
};

Outcome auc_tables(const std::string& data_dir) {
  Outcome out;
  const Target targets[] = {{"taro", {59.28, 51.26, 48.99}},
                            {"dolphins", {71.40, 77.14, 76.82}},
                            {"football", {81.36, 82.86, 81.29}}};
  const auto start = Clock::now();
  std::size_t checked = 0;
  for (const auto& t : targets) {
    auto d = load_dataset(t.dataset, data_dir, out);
    if (!d) continue;
    const auto report = table_protocol(d->graph, {closeness(1), closeness(2), closeness(3)});
    for (std::size_t i = 0; i < 3; ++i) {
      const double got = report.summaries[i].auc_mean;
      const std::string line = std::string(t.dataset) + " k=" + std::to_string(i + 1) + " AUC " + fixed(got) +
                               " target " + fixed(t.values[i], 2);
      ++checked;
      if (std::abs(got - t.values[i]) > kAucTolerancePoints) out.fail(line); else out.note(line);
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed > kTableBudgetSeconds) out.fail("runtime " + fixed(elapsed, 1) + " s");
  out.summary = std::to_string(checked) + "/9 AUC cells measured within +-" + fixed(kAucTolerancePoints, 1) +
                " required, " + fixed(elapsed, 1) + " s";
  return out;
}

Outcome football_gap(const std::string& data_dir) {
  Outcome out;
  out.summary = "football k=3 closeness minus k-degree AUC >= " + fixed(kGapPoints, 1);
  auto d = load_dataset("football", data_dir, out);
  if (!d) return out;
  const auto report = table_protocol(d->graph, {closeness(3), k_degree(3)});
  const double gap = report.summaries[0].auc_mean - report.summaries[1].auc_mean;
  out.summary += ": " + fixed(report.summaries[0].auc_mean) + " vs " + fixed(report.summaries[1].auc_mean) +
                 ", gap " + fixed(gap);
  if (gap < kGapPoints) out.fail("gap " + fixed(gap));
  return out;
}

Outcome taro_precision(const std::string& data_dir) {
  Outcome out;
  const double target[] = {15.95, 15.24, 12.93};
  out.summary = "taro closeness precision within +-" + fixed(kPrecisionTolerancePoints, 1);
  auto d = load_dataset("taro", data_dir, out);
  if (!d) return out;
  const auto report = table_protocol(d->graph, {closeness(1), closeness(2), closeness(3)});
  for (std::size_t i = 0; i < 3; ++i) {
    const double got = report.summaries[i].precision_mean;
    const std::string line = "k=" + std::to_string(i + 1) + " precision " + fixed(got) + " target " +
                             fixed(target[i], 2);
    if (std::abs(got - target[i]) > kPrecisionTolerancePoints) out.fail(line); else out.note(line);
  }
  return out;
}

// ---------------------------------------------------------------- 6

struct Fixture {
  std::size_t nodes = 0;
  std::vector<NodePair> candidates;
  std::vector<double> score;  // parallel to candidates
  std::vector<char> is_missing;
  std::vector<NodePair> missing;

  PairScores scores() const {
    std::vector<ScoredPair> entries;
    for (std::size_t i = 0; i < candidates.size(); ++i) entries.push_back({candidates[i], score[i]});
    return PairScores(nodes, std::move(entries));
  }
};

Fixture random_fixture(std::mt19937_64& rng) {
  Fixture fx;
  fx.nodes = 21;  // 210 pairs available
  std::vector<NodePair> all;
  for (NodeId u = 0; u < fx.nodes; ++u) {
    for (NodeId v = u + 1; v < fx.nodes; ++v) all.push_back({u, v});
  }
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t count = 2 + rng() % (kMetricMaxCandidates - 1);
  fx.candidates.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count));
  // Few distinct levels so that ties are common; sometimes continuous.
  const std::size_t levels = 1 + rng() % 12;
  const bool continuous = rng() % 5 == 0;
  std::uniform_real_distribution<double> real(-1.0, 1.0);
  for (std::size_t i = 0; i < count; ++i) {
    fx.score.push_back(continuous ? real(rng) : static_cast<double>(rng() % levels) * 0.25 - 1.0);
  }
  const std::size_t m = 1 + rng() % (count - 1);
  fx.is_missing.assign(count, 0);
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  for (std::size_t i = 0; i < m; ++i) fx.is_missing[idx[i]] = 1;
  for (std::size_t i = 0; i < count; ++i) {
    if (fx.is_missing[i]) fx.missing.push_back(fx.candidates[i]);
  }
  return fx;
}

Outcome metric_correctness() {
  Outcome out;
  std::mt19937_64 rng(77);
  std::size_t auc_bad = 0;
  for (std::size_t t = 0; t < kMetricFixtures; ++t) {
    const Fixture fx = random_fixture(rng);
    // Direct count: 2 n' + n'' over every (missing, non-existent) pair.
    std::uint64_t twice = 0;
    std::uint64_t comparisons = 0;
    for (std::size_t i = 0; i < fx.candidates.size(); ++i) {
      if (!fx.is_missing[i]) continue;
      for (std::size_t j = 0; j < fx.candidates.size(); ++j) {
        if (fx.is_missing[j]) continue;
        ++comparisons;
        if (fx.score[i] > fx.score[j]) twice += 2;
        else if (fx.score[i] == fx.score[j]) twice += 1;
      }
    }
    const auto scores = fx.scores();
    const auto ranking = rank_candidates(scores, fx.candidates);
    const auto groups = missing_per_group(ranking, fx.missing);
    const std::uint64_t midrank = twice_mann_whitney_u(ranking, groups);
    const double direct = static_cast<double>(twice) / (2.0 * static_cast<double>(comparisons));
    const double got = auc(scores, fx.candidates, fx.missing);
    if (midrank != twice || got != direct) {
      if (auc_bad++ == 0) {
        out.fail("fixture " + std::to_string(t) + ": midrank 2U=" + std::to_string(midrank) + " direct " +
                 std::to_string(twice));
      }
    }
  }

  double worst = 0.0;
  for (std::size_t t = 0; t < kPrecisionFixtures; ++t) {
    const Fixture fx = random_fixture(rng);
    const std::size_t p = 1 + rng() % fx.candidates.size();
    const double expected = expected_precision(fx.scores(), fx.candidates, fx.missing, p);
    std::vector<std::size_t> order(fx.candidates.size());
    std::iota(order.begin(), order.end(), 0);
    double sum = 0.0;
    for (std::size_t draw = 0; draw < kMonteCarloDraws; ++draw) {
      std::shuffle(order.begin(), order.end(), rng);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return fx.score[a] > fx.score[b]; });
      std::size_t hits = 0;
      for (std::size_t i = 0; i < p; ++i) hits += fx.is_missing[order[i]] ? 1 : 0;
      sum += static_cast<double>(hits) / static_cast<double>(p);
    }
    const double err = std::abs(sum / kMonteCarloDraws - expected);
    worst = std::max(worst, err);
    if (err > kMonteCarloTolerance) out.fail("precision fixture " + std::to_string(t) + " off by " + fixed(err, 4));
  }
  out.summary = std::to_string(kMetricFixtures - auc_bad) + "/" + std::to_string(kMetricFixtures) +
                " AUC fixtures exact; expected precision vs " + std::to_string(kMonteCarloDraws) +
                "-draw Monte Carlo on " + std::to_string(kPrecisionFixtures) + " fixtures, max deviation " +
                fixed(worst, 4) + " (tol " + fixed(kMonteCarloTolerance, 2) + ")";
  return out;
}

// ---------------------------------------------------------------- 7

Outcome ball_statistics(const std::string& data_dir) {
  Outcome out;
  const Target targets[] = {{"taro", {3.45455, 7.18136, 11.602}},
                            {"karate", {4.27647, 14.1438, 22.6532}},
                            {"dolphins", {4.58065, 13.7555, 26.2656}},
                            {"football", {8.46087, 34.3531, 87.2797}}};
  std::size_t checked = 0;
  for (const auto& t : targets) {
    auto d = load_dataset(t.dataset, data_dir, out);
    if (!d) continue;
    double sum[3] = {0, 0, 0};
    for (std::size_t trial = 0; trial < kTrials; ++trial) {
      const auto removal = remove_random_edges(d->graph, kRemovalFraction, RandomSeed{kMasterSeed, trial});
      for (std::size_t i = 0; i < 3; ++i) {
        sum[i] += NeighborhoodTable::build(removal.observed, static_cast<double>(i + 1)).mean_ball_size();
      }
    }
    for (std::size_t i = 0; i < 3; ++i) {
      const double got = sum[i] / static_cast<double>(kTrials);
      const double rel = std::abs(got - t.values[i]) / t.values[i];
      const std::string line = std::string(t.dataset) + " V_" + std::to_string(i + 1) + " " + fixed(got) +
                               " target " + fixed(t.values[i]) + " (" + fixed(100.0 * rel, 1) + "%)";
      ++checked;
      if (rel > kBallRelativeTolerance) out.fail(line); else out.note(line);
    }
  }
  out.summary = std::to_string(checked) + "/12 V_k cells measured within +-" +
                fixed(100.0 * kBallRelativeTolerance, 0) + "% required";
  return out;
}

// ---------------------------------------------------------------- 8

Outcome scaling_and_threads() {
  Outcome out;
  BenchmarkConfig config;
  config.sizes = {250, 500};
  config.m0 = 3;
  config.m = 2;
  config.ks = {1, 2, 3};
  config.repeats = kBenchRepeats;
  config.seed = kMasterSeed;
  // Same graphs every run. Each run times both sizes back to back, so the
  // per-run ratio sees one machine state; the median ratio is reported.
  std::vector<std::vector<BenchmarkRow>> runs;
  for (std::size_t r = 0; r < kBenchRuns; ++r) runs.push_back(runtime_benchmark(config));
  const auto& rows = runs.front();
  double worst = 0.0;
  for (double k : config.ks) {
    std::size_t small = 0;
    std::size_t large = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].k == k) (rows[i].n == 250 ? small : large) = i;
    }
    std::vector<double> ratios;
    for (const auto& run : runs) ratios.push_back(run[large].mean_ms / run[small].mean_ms);
    std::sort(ratios.begin(), ratios.end());
    const double ratio = ratios[ratios.size() / 2];
    worst = std::max(worst, ratio);
    const std::string line = "k=" + fixed(k, 0) + " time ratio " + fixed(ratio, 2) + " (runs " +
                             fixed(ratios.front(), 2) + ".." + fixed(ratios.back(), 2) + "), pair-visit ratio " +
                             fixed(rows[large].mean_pair_visits / rows[small].mean_pair_visits, 2) + ", V_k " +
                             fixed(rows[small].mean_ball, 1) + " -> " + fixed(rows[large].mean_ball, 1);
    if (!(ratio <= kMaxGrowthRatio)) out.fail(line); else out.note(line);
  }

  VerifyOptions options;
  options.threads = 8;
  options.tolerance = kThreadTolerance;
  const auto check = verify_thread_invariance(options);
  out.note(check.name + ": graphs=" + std::to_string(check.graphs) + " comparisons=" +
           std::to_string(check.comparisons) + " max_error=" + sci(check.max_error));
  if (!check.passed) out.fail(check.name + ": " + check.counterexample);
  out.summary = "250->500 worst time ratio " + fixed(worst, 2) + " (limit " + fixed(kMaxGrowthRatio, 1) +
                "); threads 1 vs 8 max difference " + sci(check.max_error) + " (tol " + sci(kThreadTolerance) + ")";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int criterion = 0;
  std::string data_dir{default_data_dir()};
  app.add_option("--criterion", criterion, "Criterion number")->required()->check(CLI::Range(1, 8));
  app.add_option("--data-dir", data_dir, "Dataset directory");
  CLI11_PARSE(app, argc, argv);

  Outcome out;
  try {
    switch (criterion) {
      case 1: out = oracle_equivalence(); break;
      case 2: out = semivalue_coincidence(); break;
      case 3: out = auc_tables(data_dir); break;
      case 4: out = football_gap(data_dir); break;
      case 5: out = taro_precision(data_dir); break;
      case 6: out = metric_correctness(); break;
      case 7: out = ball_statistics(data_dir); break;
      case 8: out = scaling_and_threads(); break;
    }
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  std::cout << "criterion " << criterion << ": " << (out.passed ? "PASS" : "FAIL") << ' ' << out.summary << '\n';
  for (const auto& d : out.details) std::cout << "  " << d << '\n';
  return out.passed ? 0 : 1;
}
