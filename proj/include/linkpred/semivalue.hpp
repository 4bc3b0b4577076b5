#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace linkpred {

// Probability distribution beta(c) over coalition sizes c = 0 .. n-2 for an
// n-player semivalue interaction index.
struct SemivalueWeights {
  std::size_t player_count = 0;
  std::vector<double> beta;

  // Throws unless beta has n-1 nonnegative entries summing to 1 (1e-9).
  void validate() const;
};

enum class WeightFamily { shapley, banzhaf };

SemivalueWeights shapley_weights(std::size_t n);  // beta(c) = 1 / (n-1)
SemivalueWeights banzhaf_weights(std::size_t n);  // beta(c) = C(n-2, c) / 2^(n-2)
SemivalueWeights make_weights(WeightFamily family, std::size_t n);

std::string_view to_string(WeightFamily family) noexcept;
std::optional<WeightFamily> parse_weight_family(std::string_view name);

}  // namespace linkpred
