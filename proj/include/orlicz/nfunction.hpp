#pragma once

#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orlicz {

using ParamMap = std::map<std::string, double, std::less<>>;

/// Density phi of an N-function, defined on (0, inf).
struct Density {
  std::function<double(double)> eval;
  /// phi'(t); optional, a central difference is used when empty.
  std::function<double(double)> deriv;
  /// Largest argument that may be evaluated. +inf lets the builder stop where
  /// Phi reaches 1e300.
  double domain_hint = std::numeric_limits<double>::infinity();
};

/// Closed forms registered by the catalog. Each member is optional; an empty
/// `value` falls back to quadrature of s phi(s).
struct ClosedForm {
  std::function<double(double)> value;      // Phi(t), t >= 0
  std::function<double(double)> flux;       // Phi'(t) = t phi(t)
  std::function<double(double)> curvature;  // Phi''(t) = (t phi(t))'
};

/// Value threshold defining the default domain_hint.
inline constexpr double kOverflowValue = 1e300;

/// An N-function Phi(t) = int_0^|t| s phi(s) ds. Immutable; copies share state.
class NFunction {
 public:
  /// Phi(t). Even; throws OverflowDomain for |t| > domain_hint().
  double value(double t) const;
  /// Phi'(|t|) = |t| phi(|t|); 0 at t = 0.
  double flux(double t) const;
  /// phi(|t|); at t = 0 the right limit (may be +inf or 0).
  double density(double t) const;
  /// Phi''(|t|) = phi + t phi'.
  double curvature(double t) const;

  double domain_hint() const;
  const std::string& name() const;
  const ParamMap& params() const;
  const Density& density_fn() const;
  bool has_closed_form() const;

  struct Impl;
  explicit NFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Phi from its density by adaptive Gauss–Legendre quadrature of s phi(s)
/// with `quad_points` nodes per panel.
///
/// Throws NonMonotoneDensity when t phi(t) is not strictly increasing or phi
/// is not positive on the sample grid.
NFunction build_nfunction(Density density, int quad_points = 10, std::string name = "custom",
                          ParamMap params = {});

/// Same density with closed forms attached; the closed form short-circuits
/// quadrature.
NFunction build_nfunction(Density density, ClosedForm closed, std::string name, ParamMap params);

/// Named models: "power"(p), "powersum"(p,q), "genpower"(alpha), "plog"(p),
/// "sinh"(alpha,beta), "exp", "loglinear". Dimension-dependent ranges are
/// enforced when params contain "N".
///
/// Throws UnknownModel or ParamOutOfRange.
NFunction catalog(std::string_view name, const ParamMap& params = {});
std::vector<std::string> catalog_names();

/// Result of the Legendre transform at one point.
struct ConjugatePoint {
  double value = 0.0;   // Phi~(s)
  double argmax = 0.0;  // t* with t* phi(t*) = s
};

/// Phi~(s) = max_{t>=0} (s t - Phi(t)), solved on t phi(t) = s.
/// Throws NoBracket when s exceeds Phi'(domain_hint).
ConjugatePoint complementary(const NFunction& phi, double s);

/// The complementary function as an evaluable object.
class Complementary {
 public:
  explicit Complementary(NFunction base);
  double value(double s) const;
  double argmax(double s) const;
  /// Largest s with a bracket, Phi'(domain_hint).
  double s_max() const { return s_max_; }
  const NFunction& base() const { return base_; }
  /// Phi~ as an N-function with density t*(s)/s, domain capped below s_max.
  NFunction as_nfunction() const;

 private:
  NFunction base_;
  double s_max_;
};

std::vector<double> geometric_grid(double lo, double hi, int count);
/// 2000 points from 1e-6 to domain_hint.
std::vector<double> default_grid(const NFunction& phi);

struct Delta2Report {
  bool satisfied = false;
  double sup_ratio = 0.0;   // max Phi(2t)/Phi(t) over the grid
  double tail_slope = 0.0;  // d log(ratio) / d log(t) over the last fifth of the grid
  bool overflowed = false;
};

/// Bounded-ratio heuristic for Phi(2t) <= K Phi(t). Grid points with
/// 2t beyond the domain are skipped.
Delta2Report check_delta2(const NFunction& phi, std::span<const double> grid);
Delta2Report check_delta2(const Complementary& tilde, std::span<const double> grid);
Delta2Report check_delta2(const std::function<double(double)>& value, std::span<const double> grid);

struct IndexReport {
  double l = 0.0;        // min t^2 phi / Phi
  double m = 0.0;        // 1 + max (t phi)' / phi
  double m_check = 0.0;  // max t^2 phi / Phi
  double ell = 0.0;      // 1 + min (t phi)' / phi
  double l_star = 0.0;   // N l / (N - l), +inf when l >= N
  int dim = 1;
  std::vector<double> grid;
  bool delta2_phi = false;
  bool delta2_tilde = false;
  Delta2Report delta2_phi_report;
  Delta2Report delta2_tilde_report;
  bool m_tail_growing = false;  // the (t phi)'/phi sup is still climbing at the grid end
  bool t2phi_convex = false;    // sampled midpoint convexity of t^2 phi(t)
};

/// Structural indices on the grid. Throws DegenerateIndex when Phi vanishes at
/// a positive grid point.
IndexReport indices(const NFunction& phi, std::span<const double> grid, int dim);
IndexReport indices(const NFunction& phi, int dim);

}  // namespace orlicz
