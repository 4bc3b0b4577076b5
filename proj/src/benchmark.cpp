#include "linkpred/benchmark.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "linkpred/generators.hpp"
#include "linkpred/sampling.hpp"

namespace linkpred {

void BenchmarkConfig::validate() const {
  if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  if (sizes.empty() || ks.empty() || methods.empty()) throw std::invalid_argument("empty benchmark grid");
  if (!(removal_fraction >= 0.0 && removal_fraction < 1.0)) {
    throw std::invalid_argument("removal fraction must lie in [0, 1)");
  }
  for (auto n : sizes) {
    if (!(1 <= m && m <= m0 && m0 <= n)) throw std::invalid_argument("PA parameters need 1 <= m <= m0 <= n");
  }
  for (auto method : methods) {
    for (double k : ks) MethodSpec{method, k}.validate();
  }
}

std::vector<BenchmarkRow> runtime_benchmark(const BenchmarkConfig& config) {
  config.validate();
  using Clock = std::chrono::steady_clock;
  std::vector<BenchmarkRow> rows;
  for (std::size_t si = 0; si < config.sizes.size(); ++si) {
    const std::size_t n = config.sizes[si];
    const std::size_t first_row = rows.size();
    for (double k : config.ks) {
      for (auto method : config.methods) rows.push_back({n, k, method, config.repeats, 0.0, 0.0});
    }
    for (std::size_t r = 0; r < config.repeats; ++r) {
      const RandomSeed stream{config.seed, si * config.repeats + r};
      Graph graph = generate_pa(n, config.m0, config.m, stream);
      if (config.removal_fraction > 0.0) {
        graph = remove_random_edges(graph, config.removal_fraction, RandomSeed{stream.derive(), 0}).observed;
      }
      std::size_t row = first_row;
      for (double k : config.ks) {
        for (auto method : config.methods) {
          const MethodSpec spec{method, k};
          const auto start = Clock::now();
          TableCache tables(graph, config.threads);
          const auto scores = score_method(spec, graph, tables, config.threads);
          const auto stop = Clock::now();
          rows[row].mean_ms += std::chrono::duration<double, std::milli>(stop - start).count();
          if (k > 0.0) {
            const auto& table = tables.get(k);
            rows[row].mean_ball += table.mean_ball_size();
            for (NodeId u = 0; u < table.node_count(); ++u) {
              const double len = static_cast<double>(table.list(u).size());
              rows[row].mean_pair_visits += len * (len - 1.0) / 2.0;
            }
          }
          ++row;
        }
      }
    }
    for (std::size_t row = first_row; row < rows.size(); ++row) {
      rows[row].mean_ms /= static_cast<double>(config.repeats);
      rows[row].mean_ball /= static_cast<double>(config.repeats);
      rows[row].mean_pair_visits /= static_cast<double>(config.repeats);
    }
  }
  return rows;
}

void write_benchmark_csv(const std::vector<BenchmarkRow>& rows, std::ostream& out) {
  out << "n,k,method,repeats,mean_ms,mean_vk\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.k << ',' << to_string(r.method) << ',' << r.repeats << ',' << std::fixed
        << std::setprecision(3) << r.mean_ms << ',' << std::setprecision(4) << r.mean_ball << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

}  // namespace linkpred
