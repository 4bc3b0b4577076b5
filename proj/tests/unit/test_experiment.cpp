#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "linkpred/experiment.hpp"
#include "linkpred/generators.hpp"
#include "linkpred/metrics.hpp"
#include "linkpred/sampling.hpp"

using namespace linkpred;

namespace {

Graph karate() { return load_edge_list_file(std::string(default_data_dir()) + "/karate.txt").graph; }

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.dataset = "karate";
  c.methods = {MethodSpec{MethodKind::shapley_closeness, 1}, MethodSpec{MethodKind::shapley_closeness, 2},
               MethodSpec{MethodKind::common_neighbors, 1}, MethodSpec{MethodKind::lrw, 1}};
  c.trials = 30;
  c.master_seed = 7;
  return c;
}

}  // namespace

TEST(Method, NamesRoundTrip) {
  for (auto kind : {MethodKind::shapley_closeness, MethodKind::semivalue_closeness, MethodKind::shapley_degree,
                    MethodKind::common_neighbors, MethodKind::lrw, MethodKind::srw}) {
    EXPECT_EQ(parse_method_kind(to_string(kind)), kind);
  }
  EXPECT_FALSE(parse_method_kind("katz").has_value());
  MethodSpec s{MethodKind::semivalue_closeness, 2, DistanceKind::inverse, WeightFamily::banzhaf};
  EXPECT_EQ(s.label(), "semivalue-closeness/inverse/banzhaf");
  EXPECT_THROW((MethodSpec{MethodKind::lrw, 1.5}.validate()), std::invalid_argument);
  EXPECT_THROW((MethodSpec{MethodKind::shapley_closeness, 0}.validate()), std::invalid_argument);
}

TEST(Config, Validation) {
  auto c = small_config();
  c.removal_fraction = 1.5;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_config();
  c.trials = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = small_config();
  c.methods.clear();
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(RunTrial, Deterministic) {
  auto g = karate();
  auto c = small_config();
  auto a = run_trial(g, c, 3);
  auto b = run_trial(g, c, 3);
  ASSERT_EQ(a.methods.size(), b.methods.size());
  for (std::size_t i = 0; i < a.methods.size(); ++i) {
    EXPECT_EQ(a.methods[i].auc, b.methods[i].auc);
    EXPECT_EQ(a.methods[i].precision, b.methods[i].precision);
  }
  EXPECT_EQ(a.seed, b.seed);
  EXPECT_NE(a.seed, run_trial(g, c, 4).seed);
  EXPECT_EQ(a.missing, 23u);  // round(0.3 * 78)
  EXPECT_EQ(a.candidates, 34u * 33u / 2u - (78u - 23u));
}

TEST(RunTrial, ConstantScorerGivesHalfAndBaseRate) {
  // One-step walks score every candidate 0.
  auto g = karate();
  auto c = small_config();
  c.methods = {MethodSpec{MethodKind::lrw, 1}};
  auto t = run_trial(g, c, 0);
  EXPECT_EQ(t.methods[0].auc, 0.5);
  EXPECT_DOUBLE_EQ(t.methods[0].precision, static_cast<double>(t.missing) / static_cast<double>(t.candidates));
}

TEST(RunTrial, OracleScorerIsPerfect) {
  auto g = karate();
  auto split = remove_random_edges(g, 0.3, {7, 0});
  std::vector<ScoredPair> entries;
  for (const auto& p : split.missing) entries.push_back({p, 1.0});
  PairScores truth(g.node_count(), entries);
  auto candidates = nonadjacent_pairs(split.observed);
  EXPECT_EQ(auc(truth, candidates, split.missing), 1.0);
  EXPECT_EQ(expected_precision(truth, candidates, split.missing, split.missing.size()), 1.0);
}

TEST(RunExperiment, ReportIndependentOfThreadCount) {
  auto g = karate();
  auto c = small_config();
  auto one = run_experiment(g, c);
  c.threads = 4;
  auto many = run_experiment(g, c);
  ASSERT_EQ(one.summaries.size(), many.summaries.size());
  for (std::size_t i = 0; i < one.summaries.size(); ++i) {
    EXPECT_EQ(one.summaries[i].auc_mean, many.summaries[i].auc_mean);
    EXPECT_EQ(one.summaries[i].precision_mean, many.summaries[i].precision_mean);
    EXPECT_GE(one.summaries[i].auc_mean, 0.0);
    EXPECT_LE(one.summaries[i].auc_mean, 100.0);
  }
  std::ostringstream a, b;
  write_report_csv(one, a);
  write_report_csv(many, b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(RunExperiment, CsvAndJsonShape) {
  auto g = karate();
  auto c = small_config();
  c.trials = 5;
  auto report = run_experiment(g, c);
  std::ostringstream csv;
  write_report_csv(report, csv);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "method,k,metric,mean,stddev,trials");
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 5);
  }
  EXPECT_EQ(rows, 2 * c.methods.size());

  std::ostringstream json;
  write_report_json(report, json, true);
  auto doc = nlohmann::json::parse(json.str());
  EXPECT_EQ(doc["config"]["trials"], 5);
  EXPECT_EQ(doc["config"]["seed"], 7);
  EXPECT_EQ(doc["metadata"]["dataset_checksum"], graph_checksum(g));
  EXPECT_EQ(doc["metadata"]["version"], std::string(library_version()));
  EXPECT_EQ(doc["results"].size(), c.methods.size());
  EXPECT_EQ(doc["trials"].size(), 5u);
}

TEST(RunExperiment, MeanBallReported) {
  auto g = karate();
  auto c = small_config();
  c.trials = 50;
  auto report = run_experiment(g, c);
  ASSERT_EQ(report.mean_ball.size(), 2u);  // k = 1 and k = 2
  // After removing 23 of 78 edges, V_1 = 1 + 2 * 55 / 34.
  EXPECT_NEAR(report.mean_ball[0].second, 1.0 + 110.0 / 34.0, 1e-12);
}

TEST(ResolveDataset, NameOrPath) {
  EXPECT_EQ(resolve_dataset_path("karate", "/x/y"), "/x/y/karate.txt");
  const std::string real = std::string(default_data_dir()) + "/karate.txt";
  EXPECT_EQ(resolve_dataset_path(real, "/x/y"), real);
}
