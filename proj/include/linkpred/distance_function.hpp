#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace linkpred {

enum class DistanceKind { inverse_square, inverse, inverse_exponential, indicator };

// The distance-decay function f of generalised group closeness, cut off at a
// radius: f(d) = 0 for d > radius and for unreachable nodes (d = +inf).
struct DistanceFunction {
  DistanceKind kind = DistanceKind::inverse_square;
  double radius = 1.0;
  double scale = 1.0;  // positive constant factor; rankings do not depend on it

  // Requires d > 0; a node's distance to a group containing it never
  // reaches f.
  double operator()(double d) const;
};

std::string_view to_string(DistanceKind kind) noexcept;
// Accepts "inverse-square", "inverse", "inverse-exponential", "indicator"
// (underscores also accepted).
std::optional<DistanceKind> parse_distance_kind(std::string_view name);

}  // namespace linkpred
