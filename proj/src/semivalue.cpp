#include "linkpred/semivalue.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace linkpred {

void SemivalueWeights::validate() const {
  if (player_count < 2) throw std::invalid_argument("semivalue weights need at least 2 players");
  if (beta.size() != player_count - 1) {
    throw std::invalid_argument("semivalue weights must cover coalition sizes 0..n-2");
  }
  for (double b : beta) {
    if (!(b >= 0.0)) throw std::invalid_argument("semivalue weights must be nonnegative");
  }
  const double total = std::accumulate(beta.begin(), beta.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("semivalue weights must sum to 1");
}

SemivalueWeights shapley_weights(std::size_t n) {
  if (n < 2) throw std::invalid_argument("shapley_weights: n < 2");
  return {n, std::vector<double>(n - 1, 1.0 / static_cast<double>(n - 1))};
}

SemivalueWeights banzhaf_weights(std::size_t n) {
  if (n < 2) throw std::invalid_argument("banzhaf_weights: n < 2");
  const std::size_t m = n - 2;
  const double md = static_cast<double>(m);
  std::vector<double> beta(n - 1);
  if (m <= 1000) {
    // Binomial row by the multiplicative recurrence; exact while m <= 60.
    double binom = 1.0;
    for (std::size_t c = 0; c <= m; ++c) {
      beta[c] = std::ldexp(binom, -static_cast<int>(m));
      binom = binom * static_cast<double>(m - c) / static_cast<double>(c + 1);
    }
  } else {
    for (std::size_t c = 0; c <= m; ++c) {
      const double cd = static_cast<double>(c);
      beta[c] = std::exp(std::lgamma(md + 1) - std::lgamma(cd + 1) - std::lgamma(md - cd + 1) -
                         md * std::log(2.0));
    }
  }
  // Renormalise the rounding residue so validate() holds exactly enough.
  const double total = std::accumulate(beta.begin(), beta.end(), 0.0);
  for (double& b : beta) b /= total;
  return {n, std::move(beta)};
}

SemivalueWeights make_weights(WeightFamily family, std::size_t n) {
  return family == WeightFamily::shapley ? shapley_weights(n) : banzhaf_weights(n);
}

std::string_view to_string(WeightFamily family) noexcept {
  return family == WeightFamily::shapley ? "shapley" : "banzhaf";
}

std::optional<WeightFamily> parse_weight_family(std::string_view name) {
  if (name == "shapley") return WeightFamily::shapley;
  if (name == "banzhaf") return WeightFamily::banzhaf;
  return std::nullopt;
}

}  // namespace linkpred
