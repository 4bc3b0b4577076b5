#include "linkpred/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "linkpred/baselines.hpp"
#include "linkpred/generators.hpp"
#include "linkpred/graph_enumeration.hpp"
#include "linkpred/interaction_index.hpp"
#include "linkpred/neighborhood.hpp"
#include "linkpred/oracle.hpp"
#include "linkpred/semivalue.hpp"

namespace linkpred {

void VerifyOptions::validate() const {
  if (max_n < 2 || max_n > 9) throw std::invalid_argument("max-n must lie in [2, 9] (enumeration bound)");
  if (ks.empty()) throw std::invalid_argument("empty k list");
  for (double k : ks) {
    if (!(k > 0.0) || k != std::floor(k)) throw std::invalid_argument("k values must be positive integers");
  }
  if (fs.empty()) throw std::invalid_argument("empty distance-function list");
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
}

bool VerifyReport::passed() const noexcept {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string describe_edges(const Graph& graph) {
  std::ostringstream out;
  out << "n=" << graph.node_count() << " edges=[";
  bool first = true;
  for (const auto& e : graph.edges()) {
    out << (first ? "" : " ") << e.u << '-' << e.v;
    first = false;
  }
  out << ']';
  return out.str();
}

namespace {

const std::vector<Graph>& small_graphs(std::size_t max_n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(max_n);
  if (it != cache.end()) return it->second;
  std::vector<Graph> graphs;
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (const auto& rows : connected_graphs(n)) graphs.push_back(to_graph(rows));
  }
  return cache.emplace(max_n, std::move(graphs)).first->second;
}

// Records one comparison; keeps the first failure as the counterexample.
class Comparer {
 public:
  Comparer(VerifyCheck& check, double tolerance) : check_(check), tolerance_(tolerance) {}

  template <class Describe>
  void compare(double got, double want, Describe&& describe) {
    ++check_.comparisons;
    const double err = std::abs(got - want);
    check_.max_error = std::isnan(err) ? INFINITY : std::max(check_.max_error, err);
    if (!(err <= tolerance_) && check_.passed) {
      check_.passed = false;
      std::ostringstream out;
      out << describe() << ": kernel " << format(got) << ", reference " << format(want);
      check_.counterexample = out.str();
    }
  }

 private:
  static std::string format(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
  }

  VerifyCheck& check_;
  double tolerance_;
};

void report_progress(const VerifyOptions& options, const VerifyCheck& check) {
  if (!options.progress) return;
  std::ostringstream out;
  out << check.name << ": " << (check.passed ? "pass" : "FAIL") << " (" << check.graphs << " graphs, "
      << check.comparisons << " comparisons, max error " << check.max_error << ")";
  options.progress(out.str());
}

std::string where(const Graph& g, const std::string& setting, NodeId s, NodeId t) {
  return describe_edges(g) + " " + setting + " pair (" + std::to_string(s) + "," + std::to_string(t) + ")";
}

std::string setting_text(DistanceKind f, double k) {
  std::ostringstream out;
  out << "f=" << to_string(f) << " k=" << k;
  return out.str();
}

}  // namespace

VerifyCheck verify_shapley_kernel(const VerifyOptions& options) {
  options.validate();
  VerifyCheck check;
  check.name = "shapley-closeness vs permutation oracle";
  Comparer cmp(check, options.tolerance);
  for (const auto& g : small_graphs(options.max_n)) {
    ++check.graphs;
    const auto n = static_cast<NodeId>(g.node_count());
    for (double k : options.ks) {
      const auto table = NeighborhoodTable::build(g, k);
      for (auto kind : options.fs) {
        const DistanceFunction f{kind, k};
        const auto scores = shapley_closeness_all_pairs(table, f);
        const double sign = options.inject_sign_flip ? -1.0 : 1.0;
        const TabulatedGame game(closeness_game(g, f), n);
        for (NodeId s = 0; s < n; ++s) {
          for (NodeId t = s + 1; t < n; ++t) {
            cmp.compare(sign * scores.score(s, t), -brute_force_shapley_interaction(game, s, t),
                        [&] { return where(g, setting_text(kind, k), s, t); });
          }
        }
      }
    }
  }
  report_progress(options, check);
  return check;
}

VerifyCheck verify_semivalue_kernel(const VerifyOptions& options, bool banzhaf) {
  options.validate();
  VerifyCheck check;
  check.name = banzhaf ? "semivalue-closeness (banzhaf) vs coalition oracle"
                            : "semivalue-closeness (shapley) vs coalition oracle";
  Comparer cmp(check, options.tolerance);
  for (const auto& g : small_graphs(options.max_n)) {
    ++check.graphs;
    const auto n = static_cast<NodeId>(g.node_count());
    const auto weights = banzhaf ? banzhaf_weights(n) : shapley_weights(n);
    for (double k : options.ks) {
      const auto table = NeighborhoodTable::build(g, k);
      for (auto kind : options.fs) {
        const DistanceFunction f{kind, k};
        const auto scores = semivalue_closeness_all_pairs(table, f, weights);
        const double sign = options.inject_sign_flip ? -1.0 : 1.0;
        const TabulatedGame game(closeness_game(g, f), n);
        for (NodeId s = 0; s < n; ++s) {
          for (NodeId t = s + 1; t < n; ++t) {
            cmp.compare(sign * scores.score(s, t), -brute_force_semivalue_interaction(game, s, t, weights),
                        [&] { return where(g, setting_text(kind, k), s, t); });
          }
        }
      }
    }
  }
  report_progress(options, check);
  return check;
}

VerifyCheck verify_k_degree(const VerifyOptions& options) {
  options.validate();
  VerifyCheck check;
  check.name = "shapley-degree vs k-degree game oracle";
  Comparer cmp(check, options.tolerance);
  for (const auto& g : small_graphs(options.max_n)) {
    ++check.graphs;
    const auto n = static_cast<NodeId>(g.node_count());
    for (double k : options.ks) {
      const auto scores = shapley_k_degree_scores(NeighborhoodTable::build(g, k));
      const double sign = options.inject_sign_flip ? -1.0 : 1.0;
      const TabulatedGame game(k_degree_game(g, k), n);
      for (NodeId s = 0; s < n; ++s) {
        for (NodeId t = s + 1; t < n; ++t) {
          cmp.compare(sign * scores.score(s, t), -brute_force_shapley_interaction(game, s, t),
                      [&] { return where(g, "k=" + std::to_string(static_cast<int>(k)), s, t); });
        }
      }
    }
  }
  report_progress(options, check);
  return check;
}

VerifyCheck verify_common_neighbors(const VerifyOptions& options) {
  options.validate();
  VerifyCheck check;
  check.name = "common neighbours vs set intersection";
  Comparer cmp(check, 0.0);
  for (const auto& g : small_graphs(options.max_n)) {
    ++check.graphs;
    const auto n = static_cast<NodeId>(g.node_count());
    std::vector<std::vector<double>> dist;
    for (NodeId s = 0; s < n; ++s) dist.push_back(shortest_path_distances(g, s));
    for (double k : options.ks) {
      const auto table = NeighborhoodTable::build(g, k);
      for (auto mode : {CnMode::inclusive, CnMode::strict}) {
        const auto scores = common_neighbors_scores(table, k, mode);
        auto near = [&](NodeId a, NodeId w) {
          return a != w && (mode == CnMode::inclusive ? dist[a][w] <= k : dist[a][w] < k);
        };
        for (NodeId s = 0; s < n; ++s) {
          for (NodeId t = s + 1; t < n; ++t) {
            double shared = 0.0;
            for (NodeId w = 0; w < n; ++w) shared += near(s, w) && near(t, w) ? 1.0 : 0.0;
            cmp.compare(scores.score(s, t), shared, [&] {
              return where(g, "k=" + std::to_string(static_cast<int>(k)) + " " + std::string(to_string(mode)), s,
                           t);
            });
          }
        }
      }
    }
  }
  report_progress(options, check);
  return check;
}

namespace {

using Matrix = std::vector<std::vector<double>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

}  // namespace

VerifyCheck verify_random_walks(const VerifyOptions& options) {
  options.validate();
  VerifyCheck check;
  check.name = "lrw/srw vs dense matrix powers";
  Comparer cmp(check, 1e-12);
  for (const auto& g : small_graphs(options.max_n)) {
    ++check.graphs;
    const std::size_t n = g.node_count();
    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    Matrix step(n, std::vector<double>(n, 0.0));
    Matrix power(n, std::vector<double>(n, 0.0));
    for (std::size_t u = 0; u < n; ++u) {
      power[u][u] = 1.0;
      for (std::size_t v = 0; v < n; ++v) {
        if (g.has_edge(static_cast<NodeId>(u), static_cast<NodeId>(v))) {
          step[u][v] = 1.0 / static_cast<double>(g.degree(static_cast<NodeId>(u)));
        }
      }
    }
    Matrix superposed = power;
    std::size_t reached = 0;
    std::vector<double> ks(options.ks);
    std::sort(ks.begin(), ks.end());
    for (double kd : ks) {
      const auto k = static_cast<std::size_t>(kd);
      while (reached < k) {
        power = multiply(power, step);
        for (std::size_t u = 0; u < n; ++u) {
          for (std::size_t v = 0; v < n; ++v) superposed[u][v] += power[u][v];
        }
        ++reached;
      }
      const auto lrw = lrw_scores(g, k);
      const auto srw = srw_scores(g, k);
      for (NodeId s = 0; s < n; ++s) {
        for (NodeId t = s + 1; t < n; ++t) {
          if (g.has_edge(s, t)) continue;
          const double ds = static_cast<double>(g.degree(s)) / two_m;
          const double dt = static_cast<double>(g.degree(t)) / two_m;
          const auto label = [&] { return where(g, "k=" + std::to_string(k), s, t); };
          cmp.compare(lrw.score(s, t), ds * power[s][t] + dt * power[t][s], label);
          cmp.compare(srw.score(s, t), ds * superposed[s][t] + dt * superposed[t][s], label);
        }
      }
    }
  }
  report_progress(options, check);
  return check;
}

VerifyCheck verify_thread_invariance(const VerifyOptions& options) {
  options.validate();
  VerifyCheck check;
  check.name = "threads 1 vs " + std::to_string(options.threads);
  Comparer cmp(check, options.tolerance);
  auto same = [&](const PairScores& one, const PairScores& many, const Graph& g, const std::string& what) {
    if (one.size() != many.size()) {
      cmp.compare(static_cast<double>(many.size()), static_cast<double>(one.size()),
                  [&] { return describe_edges(g) + " " + what + " stored pair count"; });
      return;
    }
    for (std::size_t i = 0; i < one.size(); ++i) {
      const auto& a = one.entries()[i];
      const auto& b = many.entries()[i];
      if (a.pair != b.pair) {
        cmp.compare(1.0, 0.0, [&] { return "n=" + std::to_string(g.node_count()) + " " + what + " pair sets differ"; });
        return;
      }
      cmp.compare(b.score, a.score, [&] {
        return "n=" + std::to_string(g.node_count()) + " " + what + " pair (" + std::to_string(a.pair.u) + "," +
               std::to_string(a.pair.v) + ")";
      });
    }
  };
  for (std::size_t i = 0; i < options.pa_graphs; ++i) {
    const Graph g = generate_pa(options.pa_nodes, 3, 2, RandomSeed{0x7e57, i});
    ++check.graphs;
    for (double k : options.ks) {
      const auto table_one = NeighborhoodTable::build(g, k, 1);
      const auto table_many = NeighborhoodTable::build(g, k, options.threads);
      for (auto kind : options.fs) {
        const DistanceFunction f{kind, k};
        const std::string what = setting_text(kind, k);
        same(shapley_closeness_all_pairs(table_one, f, {1}),
             shapley_closeness_all_pairs(table_many, f, {options.threads}), g, "shapley " + what);
        const auto banzhaf = banzhaf_weights(g.node_count());
        same(semivalue_closeness_all_pairs(table_one, f, banzhaf, {1}),
             semivalue_closeness_all_pairs(table_many, f, banzhaf, {options.threads}), g, "banzhaf " + what);
      }
      const auto steps = static_cast<std::size_t>(k);
      same(lrw_scores(g, steps, 1), lrw_scores(g, steps, options.threads), g, "lrw");
      same(srw_scores(g, steps, 1), srw_scores(g, steps, options.threads), g, "srw");
    }
  }
  report_progress(options, check);
  return check;
}

VerifyReport run_verify(const VerifyOptions& options) {
  options.validate();
  VerifyReport report;
  report.checks.push_back(verify_shapley_kernel(options));
  report.checks.push_back(verify_semivalue_kernel(options, false));
  report.checks.push_back(verify_semivalue_kernel(options, true));
  report.checks.push_back(verify_k_degree(options));
  report.checks.push_back(verify_common_neighbors(options));
  report.checks.push_back(verify_random_walks(options));
  report.checks.push_back(verify_thread_invariance(options));
  return report;
}

}  // namespace linkpred
