#include "linkpred/experiment.hpp"

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "linkpred/interaction_index.hpp"
#include "linkpred/metrics.hpp"
#include "linkpred/parallel.hpp"
#include "linkpred/random.hpp"
#include "linkpred/sampling.hpp"

namespace linkpred {

std::string_view library_version() noexcept { return LINKPRED_VERSION; }
std::string_view default_data_dir() noexcept { return LINKPRED_DATA_DIR; }

std::string resolve_dataset_path(const std::string& name_or_path, const std::string& data_dir) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(name_or_path)) return name_or_path;
  return (fs::path(data_dir) / (name_or_path + ".txt")).string();
}

std::string_view to_string(MethodKind kind) noexcept {
  switch (kind) {
    case MethodKind::shapley_closeness: return "shapley-closeness";
    case MethodKind::semivalue_closeness: return "semivalue-closeness";
    case MethodKind::shapley_degree: return "shapley-degree";
    case MethodKind::common_neighbors: return "cn";
    case MethodKind::lrw: return "lrw";
    case MethodKind::srw: return "srw";
  }
  return "?";
}

std::optional<MethodKind> parse_method_kind(std::string_view name) {
  for (auto kind : {MethodKind::shapley_closeness, MethodKind::semivalue_closeness, MethodKind::shapley_degree,
                    MethodKind::common_neighbors, MethodKind::lrw, MethodKind::srw}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

bool MethodSpec::uses_table() const noexcept { return kind != MethodKind::lrw && kind != MethodKind::srw; }

std::string MethodSpec::label() const {
  std::string out(to_string(kind));
  switch (kind) {
    case MethodKind::shapley_closeness:
      out += "/" + std::string(to_string(f));
      break;
    case MethodKind::semivalue_closeness:
      out += "/" + std::string(to_string(f)) + "/" + std::string(to_string(weights));
      break;
    case MethodKind::common_neighbors:
      out += "/" + std::string(to_string(cn_mode));
      break;
    default:
      break;
  }
  return out;
}

void MethodSpec::validate() const {
  if (uses_table()) {
    if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument(label() + ": k must be positive");
  } else if (!(k >= 0.0) || k != std::floor(k) || k > 1e6) {
    throw std::invalid_argument(label() + ": k must be a whole number of steps");
  }
}

const NeighborhoodTable& TableCache::get(double radius) {
  auto it = tables_.find(radius);
  if (it == tables_.end()) it = tables_.emplace(radius, NeighborhoodTable::build(graph_, radius, threads_)).first;
  return it->second;
}

PairScores score_method(const MethodSpec& spec, const Graph& graph, TableCache& tables, unsigned threads) {
  spec.validate();
  const KernelOptions options{threads};
  switch (spec.kind) {
    case MethodKind::shapley_closeness:
      return shapley_closeness_all_pairs(tables.get(spec.k), {spec.f, spec.k}, options);
    case MethodKind::semivalue_closeness:
      if (graph.node_count() < 2) return PairScores(graph.node_count(), {});
      return semivalue_closeness_all_pairs(tables.get(spec.k), {spec.f, spec.k},
                                           make_weights(spec.weights, graph.node_count()), options);
    case MethodKind::shapley_degree:
      return shapley_k_degree_scores(tables.get(spec.k), options);
    case MethodKind::common_neighbors:
      return common_neighbors_scores(tables.get(spec.k), spec.k, spec.cn_mode);
    case MethodKind::lrw:
      return lrw_scores(graph, static_cast<std::size_t>(spec.k), threads);
    case MethodKind::srw:
      return srw_scores(graph, static_cast<std::size_t>(spec.k), threads);
  }
  throw std::logic_error("unhandled method kind");
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!(removal_fraction > 0.0 && removal_fraction < 1.0)) {
    throw std::invalid_argument("removal fraction must lie strictly between 0 and 1");
  }
  if (methods.empty()) throw std::invalid_argument("no methods selected");
  for (const auto& m : methods) m.validate();
}

TrialOutcome run_trial(const Graph& graph, const ExperimentConfig& config, std::size_t trial_index) {
  const RandomSeed seed{config.master_seed, trial_index};
  const EdgeRemoval split = remove_random_edges(graph, config.removal_fraction, seed);
  const auto candidates = nonadjacent_pairs(split.observed);

  TrialOutcome outcome;
  outcome.trial_index = trial_index;
  outcome.seed = seed.derive();
  outcome.missing = split.missing.size();
  outcome.candidates = candidates.size();

  TableCache tables(split.observed, 1);
  for (const auto& spec : config.methods) {
    const auto scores = score_method(spec, split.observed, tables, 1);
    const Ranking ranking = rank_candidates(scores, candidates);
    outcome.methods.push_back(
        {auc(ranking, split.missing), expected_precision(ranking, split.missing, split.missing.size())});
  }
  for (const auto& spec : config.methods) {
    if (!spec.uses_table()) continue;
    bool seen = false;
    for (const auto& [k, mean] : outcome.ball) seen = seen || k == spec.k;
    if (!seen) outcome.ball.emplace_back(spec.k, tables.get(spec.k).mean_ball_size());
  }
  return outcome;
}

namespace {

// Mean and sample standard deviation, both scaled to percent.
std::pair<double, double> percent_stats(const std::vector<double>& xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / static_cast<double>(xs.size());
  double sq = 0.0;
  for (double x : xs) sq += (x - mean) * (x - mean);
  const double sd = xs.size() > 1 ? std::sqrt(sq / static_cast<double>(xs.size() - 1)) : 0.0;
  return {100.0 * mean, 100.0 * sd};
}

std::string fixed3(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << v;
  return s.str();
}

nlohmann::json method_json(const MethodSpec& m) {
  return {{"method", std::string(to_string(m.kind))},
          {"label", m.label()},
          {"k", m.k},
          {"f", std::string(to_string(m.f))},
          {"weights", std::string(to_string(m.weights))},
          {"cn_mode", std::string(to_string(m.cn_mode))}};
}

}  // namespace

ExperimentReport run_experiment(const Graph& graph, const ExperimentConfig& config) {
  config.validate();
  ExperimentReport report;
  report.config = config;
  report.dataset_checksum = graph_checksum(graph);
  report.version = std::string(library_version());
  report.node_count = graph.node_count();
  report.edge_count = graph.edge_count();
  report.trials.resize(config.trials);
  parallel_chunks(config.trials, config.threads, [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) report.trials[t] = run_trial(graph, config, t);
  });

  for (std::size_t i = 0; i < config.methods.size(); ++i) {
    std::vector<double> aucs, precisions;
    for (const auto& t : report.trials) {
      aucs.push_back(t.methods[i].auc);
      precisions.push_back(t.methods[i].precision);
    }
    const auto [am, as] = percent_stats(aucs);
    const auto [pm, ps] = percent_stats(precisions);
    report.summaries.push_back({config.methods[i], am, as, pm, ps, config.trials});
  }
  if (!report.trials.empty()) {
    for (std::size_t b = 0; b < report.trials.front().ball.size(); ++b) {
      double sum = 0.0;
      for (const auto& t : report.trials) sum += t.ball[b].second;
      report.mean_ball.emplace_back(report.trials.front().ball[b].first,
                                    sum / static_cast<double>(report.trials.size()));
    }
  }
  return report;
}

void write_report_csv(const ExperimentReport& report, std::ostream& out) {
  out << "method,k,metric,mean,stddev,trials\n";
  for (const auto& s : report.summaries) {
    const std::string head = s.spec.label() + "," + format_score(s.spec.k) + ",";
    out << head << "auc," << fixed3(s.auc_mean) << ',' << fixed3(s.auc_stddev) << ',' << s.trials << '\n';
    out << head << "precision," << fixed3(s.precision_mean) << ',' << fixed3(s.precision_stddev) << ','
        << s.trials << '\n';
  }
}

void write_report_json(const ExperimentReport& report, std::ostream& out, bool include_trials) {
  nlohmann::json doc;
  const auto& c = report.config;
  nlohmann::json methods = nlohmann::json::array();
  for (const auto& m : c.methods) methods.push_back(method_json(m));
  doc["config"] = {{"dataset", c.dataset},
                   {"methods", methods},
                   {"removal_fraction", c.removal_fraction},
                   {"trials", c.trials},
                   {"seed", c.master_seed},
                   {"threads", c.threads}};
  doc["metadata"] = {{"version", report.version},
                     {"dataset_path", report.dataset_path},
                     {"dataset_checksum", report.dataset_checksum},
                     {"nodes", report.node_count},
                     {"edges", report.edge_count}};
  nlohmann::json results = nlohmann::json::array();
  for (const auto& s : report.summaries) {
    auto row = method_json(s.spec);
    row["auc_mean"] = s.auc_mean;
    row["auc_stddev"] = s.auc_stddev;
    row["precision_mean"] = s.precision_mean;
    row["precision_stddev"] = s.precision_stddev;
    row["trials"] = s.trials;
    results.push_back(row);
  }
  doc["results"] = results;
  nlohmann::json ball = nlohmann::json::array();
  for (const auto& [k, v] : report.mean_ball) ball.push_back({{"k", k}, {"mean_ball_size", v}});
  doc["mean_ball_size"] = ball;
  if (include_trials) {
    nlohmann::json trials = nlohmann::json::array();
    for (const auto& t : report.trials) {
      nlohmann::json row = {{"trial", t.trial_index},
                            {"seed", t.seed},
                            {"missing", t.missing},
                            {"candidates", t.candidates}};
      nlohmann::json per = nlohmann::json::array();
      for (const auto& m : t.methods) per.push_back({{"auc", m.auc}, {"precision", m.precision}});
      row["methods"] = per;
      trials.push_back(row);
    }
    doc["trials"] = trials;
  }
  out << doc.dump(2) << '\n';
}

}  // namespace linkpred
