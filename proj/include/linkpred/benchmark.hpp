#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "linkpred/experiment.hpp"

namespace linkpred {

struct BenchmarkConfig {
  std::vector<std::size_t> sizes{250, 500};
  std::size_t m0 = 3;
  std::size_t m = 2;
  std::vector<double> ks{1, 2, 3};
  std::vector<MethodKind> methods{MethodKind::shapley_closeness};
  std::size_t repeats = 10;
  // Share of edges removed before measuring, as in the link-prediction
  // protocol; 0 measures the generated graph itself.
  double removal_fraction = 0.30;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  void validate() const;
};

struct BenchmarkRow {
  std::size_t n = 0;
  double k = 0.0;
  MethodKind method = MethodKind::shapley_closeness;
  std::size_t repeats = 0;
  double mean_ms = 0.0;       // table construction plus scoring
  double mean_ball = 0.0;     // V_k of the measured graphs
  double mean_pair_visits = 0.0;  // sum over u of C(|list(u)|, 2)
};

// One row per (size, k, method), in that nesting order. Every repeat draws a
// fresh PA graph from stream (size index * repeats + repeat) of the seed.
std::vector<BenchmarkRow> runtime_benchmark(const BenchmarkConfig& config);

// Rows "n,k,method,repeats,mean_ms,mean_vk".
void write_benchmark_csv(const std::vector<BenchmarkRow>& rows, std::ostream& out);

}  // namespace linkpred
