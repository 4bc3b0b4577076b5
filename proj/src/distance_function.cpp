#include "linkpred/distance_function.hpp"

#include <cmath>
#include <stdexcept>

namespace linkpred {

double DistanceFunction::operator()(double d) const {
  if (!(d > 0.0)) throw std::invalid_argument("distance function evaluated at d <= 0");
  if (d > radius) return 0.0;  // also covers +inf
  switch (kind) {
    case DistanceKind::inverse_square:
      return scale / (d * d);
    case DistanceKind::inverse:
      return scale / d;
    case DistanceKind::inverse_exponential:
      return scale * std::exp2(-d);
    case DistanceKind::indicator:
      return scale;
  }
  return 0.0;
}

std::string_view to_string(DistanceKind kind) noexcept {
  switch (kind) {
    case DistanceKind::inverse_square:
      return "inverse-square";
    case DistanceKind::inverse:
      return "inverse";
    case DistanceKind::inverse_exponential:
      return "inverse-exponential";
    case DistanceKind::indicator:
      return "indicator";
  }
  return "?";
}

std::optional<DistanceKind> parse_distance_kind(std::string_view name) {
  std::string normalized(name);
  for (auto& c : normalized) {
    if (c == '_') c = '-';
  }
  for (auto kind : {DistanceKind::inverse_square, DistanceKind::inverse,
                    DistanceKind::inverse_exponential, DistanceKind::indicator}) {
    if (normalized == to_string(kind)) return kind;
  }
  return std::nullopt;
}

}  // namespace linkpred
