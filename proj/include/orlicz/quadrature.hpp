#pragma once

#include <functional>
#include <vector>

namespace orlicz::quadrature {

/// Gauss–Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rule with `points` nodes (1 <= points <= 64), computed once and cached.
const GaussRule& gauss_legendre(int points);

struct Result {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
};

/// Adaptive Gauss–Legendre integration of f over [a, b].
///
/// A panel is accepted when the `points`-point rule on the panel agrees with
/// the sum over its two halves to within max(abs_tol, rel_tol * |whole|);
/// otherwise both halves are refined recursively up to `max_depth`.
Result integrate(const std::function<double(double)>& f, double a, double b, int points = 10,
                 double rel_tol = 1e-14, double abs_tol = 0.0, int max_depth = 48);

}  // namespace orlicz::quadrature
