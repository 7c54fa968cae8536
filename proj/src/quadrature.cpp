#include "orlicz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace orlicz::quadrature {
namespace {

GaussRule build_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton on P_n starting from the Chebyshev-like guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = (n == 1) ? x : p1;
      const double pn1 = (n == 1) ? 1.0 : p0;
      dp = n * (x * pn - pn1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
  }
  return rule;
}

double apply(const GaussRule& rule, const std::function<double(double)>& f, double a, double b,
             long& evals) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) acc += rule.weights[k] * f(mid + half * rule.nodes[k]);
  evals += static_cast<long>(rule.nodes.size());
  return half * acc;
}

void refine(const GaussRule& rule, const std::function<double(double)>& f, double a, double b,
            double whole, double rel_tol, double abs_tol, double density, double parent_err, int depth,
            Result& out, int depth_used = 0) {
  const double mid = 0.5 * (a + b);
  const double left = apply(rule, f, a, mid, out.evaluations);
  const double right = apply(rule, f, mid, b, out.evaluations);
  const double split = left + right;
  const double err = std::fabs(split - whole);
  if (!std::isfinite(split)) {
    out.value += split;
    out.error = std::numeric_limits<double>::infinity();
    return;
  }
  // Local tolerance: relative to the panel, or the panel's share of the total.
  const double tol = std::max({abs_tol, rel_tol * std::fabs(split), rel_tol * density * std::fabs(b - a)});
  // Near-converged panels whose estimate stops shrinking are roundoff-bound.
  const bool stalled = err >= parent_err && (err <= 1e-10 * std::fabs(split) || depth_used >= 10);
  if (err <= tol || stalled || depth <= 0 || !(mid > a && mid < b)) {
    out.value += split;
    out.error += err;
    return;
  }
  refine(rule, f, a, mid, left, rel_tol, abs_tol * 0.5, density, err, depth - 1, out, depth_used + 1);
  refine(rule, f, mid, b, right, rel_tol, abs_tol * 0.5, density, err, depth - 1, out, depth_used + 1);
}

}  // namespace

const GaussRule& gauss_legendre(int points) {
  if (points < 1 || points > 64) throw std::invalid_argument("gauss_legendre: points out of [1, 64]");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(points);
  if (it == cache.end()) it = cache.emplace(points, build_rule(points)).first;
  return it->second;
}

Result integrate(const std::function<double(double)>& f, double a, double b, int points,
                 double rel_tol, double abs_tol, int max_depth) {
  Result out;
  if (a == b) return out;
  const GaussRule& rule = gauss_legendre(points);
  const double whole = apply(rule, f, a, b, out.evaluations);
  // Gauss nodes are interior, so a non-finite estimate means the integral diverges.
  if (!std::isfinite(whole)) {
    out.value = whole;
    out.error = std::numeric_limits<double>::infinity();
    return out;
  }
  const double density = std::fabs(whole / (b - a));
  refine(rule, f, a, b, whole, rel_tol, abs_tol, density, std::numeric_limits<double>::infinity(),
         max_depth, out);
  return out;
}

}  // namespace orlicz::quadrature
