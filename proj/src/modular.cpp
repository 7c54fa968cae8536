#include "orlicz/modular.hpp"

#include <cmath>
#include <limits>

#include "orlicz/error.hpp"

namespace orlicz {
namespace {

YoungFn wrap(const NFunction& phi) {
  return [phi](double t) { return phi.value(t); };
}

bool is_overflow(const Error& e) {
  return e.kind() == ErrorKind::OverflowDomain || e.kind() == ErrorKind::NoBracket;
}

}  // namespace

double modular(const YoungFn& phi, const DiscreteFunction& u, bool of_gradient, double scale) {
  const Mesh& m = *u.mesh;
  double total = 0.0;
  if (of_gradient) {
    const auto g = u.gradient_norms();
    for (std::size_t e = 0; e < g.size(); ++e) total += m.elements[e].measure * phi(scale * g[e]);
  } else {
    const auto vals = u.at_quadrature();
    for (std::size_t i = 0; i < vals.size(); ++i) total += m.quad[i].weight * phi(scale * std::fabs(vals[i]));
  }
  return total;
}

double modular(const NFunction& phi, const DiscreteFunction& u, bool of_gradient, double scale) {
  return modular(wrap(phi), u, of_gradient, scale);
}

LuxemburgNorm luxemburg_norm(const YoungFn& phi, const DiscreteFunction& u, bool of_gradient) {
  LuxemburgNorm out;
  // Modular of u / lambda; +inf when Phi leaves its domain.
  auto mod = [&](double lambda) {
    try {
      return modular(phi, u, of_gradient, 1.0 / lambda);
    } catch (const Error& e) {
      if (!is_overflow(e)) throw;
      return std::numeric_limits<double>::infinity();
    }
  };
  bool nonzero = false;
  if (of_gradient) {
    for (const double g : u.gradient_norms()) nonzero = nonzero || g > 0.0;
  } else {
    for (const double v : u.values) nonzero = nonzero || v != 0.0;
  }
  if (!nonzero) return out;

  double lo = 1.0, hi = 1.0;
  if (mod(1.0) > 1.0) {
    while (mod(hi) > 1.0) {
      lo = hi;
      hi *= 2.0;
    }
  } else {
    while (mod(lo) <= 1.0) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1e-300) break;
    }
  }
  while (hi - lo > 1e-14 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (mod(mid) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  out.value = hi;
  out.lo = lo;
  out.hi = hi;
  out.modular_at_value = mod(hi);
  return out;
}

LuxemburgNorm luxemburg_norm(const NFunction& phi, const DiscreteFunction& u, bool of_gradient) {
  return luxemburg_norm(wrap(phi), u, of_gradient);
}

InequalityCheck verify_holder(const NFunction& phi, const DiscreteFunction& u, const DiscreteFunction& v,
                              double tol) {
  InequalityCheck out;
  const auto uq = u.at_quadrature();
  const auto vq = v.at_quadrature();
  double integral = 0.0;
  for (std::size_t i = 0; i < uq.size(); ++i) integral += u.mesh->quad[i].weight * uq[i] * vq[i];
  out.lhs = std::fabs(integral);
  const Complementary tilde(phi);
  const double nu = luxemburg_norm(phi, u, false).value;
  const double nv = luxemburg_norm([&tilde](double s) { return tilde.value(s); }, v, false).value;
  out.rhs = 2.0 * nu * nv;
  out.holds = out.lhs <= out.rhs + tol * std::max(1.0, out.rhs);
  return out;
}

InequalityCheck verify_modular_poincare(const NFunction& phi, const DiscreteFunction& u, double diam,
                                        double tol) {
  if (!u.boundary_is_zero()) throw Error(ErrorKind::NonzeroBoundary, "u does not vanish on the boundary");
  InequalityCheck out;
  out.lhs = modular(phi, u, false);
  try {
    out.rhs = modular(phi, u, true, diam);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OverflowDomain) throw;
    out.rhs = std::numeric_limits<double>::infinity();
  }
  out.holds = out.lhs <= out.rhs + tol * std::max(1.0, out.rhs);
  return out;
}

InequalityCheck verify_young(const NFunction& phi, std::span<const double> t_grid, std::span<const double> s_grid,
                             double tol) {
  InequalityCheck out;
  out.holds = true;
  const Complementary tilde(phi);
  std::vector<double> tv(s_grid.size());
  for (std::size_t j = 0; j < s_grid.size(); ++j) tv[j] = tilde.value(s_grid[j]);
  double worst = -std::numeric_limits<double>::infinity();
  for (const double t : t_grid) {
    const double pt = phi.value(t);
    for (std::size_t j = 0; j < s_grid.size(); ++j) {
      const double lhs = s_grid[j] * t;
      const double rhs = pt + tv[j];
      const double excess = (lhs - rhs) / std::max(1.0, rhs);
      if (excess > worst) {
        worst = excess;
        out.lhs = lhs;
        out.rhs = rhs;
      }
      if (excess > tol) out.holds = false;
    }
  }
  return out;
}

}  // namespace orlicz
