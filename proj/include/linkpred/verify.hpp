#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "linkpred/distance_function.hpp"
#include "linkpred/graph.hpp"

namespace linkpred {

struct VerifyOptions {
  std::size_t max_n = 6;  // graphs with 2 .. max_n nodes; at most 9
  std::vector<double> ks{1, 2, 3};
  std::vector<DistanceKind> fs{DistanceKind::inverse_square, DistanceKind::inverse,
                               DistanceKind::inverse_exponential, DistanceKind::indicator};
  double tolerance = 1e-9;
  // Thread-invariance check: kernels at 1 thread against `threads` workers
  // on `pa_graphs` preferential-attachment graphs with `pa_nodes` nodes.
  unsigned threads = 8;
  std::size_t pa_graphs = 5;
  std::size_t pa_nodes = 200;
  // Mutation hook: negate every closeness-kernel score before comparing.
  bool inject_sign_flip = false;
  std::function<void(const std::string&)> progress;

  void validate() const;
};

struct VerifyCheck {
  std::string name;
  std::size_t graphs = 0;
  std::size_t comparisons = 0;
  double max_error = 0.0;
  bool passed = true;
  std::string counterexample;  // first failure only
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool passed() const noexcept;
};

// Each check runs on every connected graph with 2 .. max_n nodes.
VerifyCheck verify_shapley_kernel(const VerifyOptions& options);    // vs permutation oracle
VerifyCheck verify_semivalue_kernel(const VerifyOptions& options, bool banzhaf);  // vs coalition oracle
VerifyCheck verify_k_degree(const VerifyOptions& options);          // indicator kernel vs k-degree game
VerifyCheck verify_common_neighbors(const VerifyOptions& options);  // vs set intersection, both modes
VerifyCheck verify_random_walks(const VerifyOptions& options);      // vs dense matrix powers
VerifyCheck verify_thread_invariance(const VerifyOptions& options);

VerifyReport run_verify(const VerifyOptions& options);

// "0-1 1-2 ..." for counterexample messages.
std::string describe_edges(const Graph& graph);

}  // namespace linkpred
