#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linkpred/baselines.hpp"
#include "linkpred/distance_function.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/neighborhood.hpp"
#include "linkpred/pair_scores.hpp"
#include "linkpred/semivalue.hpp"

namespace linkpred {

std::string_view library_version() noexcept;
std::string_view default_data_dir() noexcept;

// An existing file path is returned as is; otherwise `<data_dir>/<name>.txt`.
std::string resolve_dataset_path(const std::string& name_or_path, const std::string& data_dir);

enum class MethodKind { shapley_closeness, semivalue_closeness, shapley_degree, common_neighbors, lrw, srw };

std::string_view to_string(MethodKind kind) noexcept;
// "shapley-closeness", "semivalue-closeness", "shapley-degree", "cn", "lrw", "srw"
std::optional<MethodKind> parse_method_kind(std::string_view name);

// For the walk baselines k is a step count and must be a whole number.
struct MethodSpec {
  MethodKind kind = MethodKind::shapley_closeness;
  double k = 1.0;
  DistanceKind f = DistanceKind::inverse_square;
  WeightFamily weights = WeightFamily::shapley;
  CnMode cn_mode = CnMode::inclusive;

  bool uses_table() const noexcept;
  // Method name plus the settings that apply to it, e.g.
  // "semivalue-closeness/inverse-square/banzhaf".
  std::string label() const;
  void validate() const;
};

// Lazily built neighbourhood tables of one graph, keyed by radius.
class TableCache {
 public:
  TableCache(const Graph& graph, unsigned threads) : graph_(graph), threads_(threads) {}
  const NeighborhoodTable& get(double radius);

 private:
  const Graph& graph_;
  unsigned threads_;
  std::map<double, NeighborhoodTable> tables_;
};

PairScores score_method(const MethodSpec& spec, const Graph& graph, TableCache& tables, unsigned threads = 1);

struct ExperimentConfig {
  std::string dataset;  // name or path, as given
  std::vector<MethodSpec> methods;
  double removal_fraction = 0.30;
  std::size_t trials = 1000;
  std::uint64_t master_seed = 0;
  unsigned threads = 1;

  void validate() const;
};

struct MethodOutcome {
  double auc = 0.0;        // fraction in [0, 1]
  double precision = 0.0;  // fraction in [0, 1]
};

struct TrialOutcome {
  std::size_t trial_index = 0;
  std::uint64_t seed = 0;
  std::size_t missing = 0;
  std::size_t candidates = 0;
  std::vector<MethodOutcome> methods;             // parallel to config.methods
  std::vector<std::pair<double, double>> ball;    // (k, mean ball size)
};

// One removal, all methods scored on the observed graph.
TrialOutcome run_trial(const Graph& graph, const ExperimentConfig& config, std::size_t trial_index);

struct MethodSummary {
  MethodSpec spec;
  double auc_mean = 0.0;  // percent
  double auc_stddev = 0.0;
  double precision_mean = 0.0;
  double precision_stddev = 0.0;
  std::size_t trials = 0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::string dataset_path;
  std::string dataset_checksum;
  std::string version;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::vector<MethodSummary> summaries;
  std::vector<std::pair<double, double>> mean_ball;  // (k, V_k averaged over trials)
  std::vector<TrialOutcome> trials;
};

// Trials run on `config.threads` workers, one trial per task, and are
// aggregated in index order, so the report does not depend on the thread
// count.
ExperimentReport run_experiment(const Graph& graph, const ExperimentConfig& config);

// Rows "method,k,metric,mean,stddev,trials" with three decimals.
void write_report_csv(const ExperimentReport& report, std::ostream& out);
void write_report_json(const ExperimentReport& report, std::ostream& out, bool include_trials = false);

}  // namespace linkpred
