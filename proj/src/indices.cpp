#include <cmath>
#include <sstream>

#include "orlicz/error.hpp"
#include "orlicz/nfunction.hpp"

namespace orlicz {
namespace {

constexpr double kTailSlopeLimit = 0.02;

// Least-squares slope of log y against log x.
double log_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2) return 0.0;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

Delta2Report ratio_test(const std::function<double(double)>& value, std::span<const double> grid,
                        double domain) {
  Delta2Report rep;
  std::vector<double> ts, ratios;
  for (const double t : grid) {
    if (!(t > 0.0) || 2.0 * t > domain) continue;
    double a, b;
    try {
      a = value(t);
      b = value(2.0 * t);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OverflowDomain && e.kind() != ErrorKind::NoBracket) throw;
      rep.overflowed = true;
      break;
    }
    const double r = b / a;
    if (!std::isfinite(b) || !std::isfinite(r)) {
      rep.overflowed = true;
      break;
    }
    if (!(a > 0.0)) continue;
    ts.push_back(t);
    ratios.push_back(r);
    rep.sup_ratio = std::max(rep.sup_ratio, r);
  }
  if (rep.overflowed) rep.sup_ratio = std::numeric_limits<double>::infinity();
  if (ts.size() >= 5) {
    const std::size_t start = ts.size() - std::max<std::size_t>(ts.size() / 5, 2);
    rep.tail_slope = log_slope(std::span(ts).subspan(start), std::span(ratios).subspan(start));
  }
  rep.satisfied = !rep.overflowed && !ts.empty() && rep.tail_slope <= kTailSlopeLimit;
  return rep;
}

}  // namespace

Delta2Report check_delta2(const NFunction& phi, std::span<const double> grid) {
  return ratio_test([&](double t) { return phi.value(t); }, grid, phi.domain_hint());
}

Delta2Report check_delta2(const Complementary& tilde, std::span<const double> grid) {
  return ratio_test([&](double s) { return tilde.value(s); }, grid, tilde.s_max());
}

Delta2Report check_delta2(const std::function<double(double)>& value, std::span<const double> grid) {
  return ratio_test(value, grid, std::numeric_limits<double>::infinity());
}

IndexReport indices(const NFunction& phi, std::span<const double> grid, int dim) {
  IndexReport rep;
  rep.dim = dim;
  rep.grid.assign(grid.begin(), grid.end());
  rep.l = std::numeric_limits<double>::infinity();
  rep.m_check = 0.0;
  double lo_ratio = std::numeric_limits<double>::infinity();
  double hi_ratio = -std::numeric_limits<double>::infinity();
  std::vector<double> curv_ratio;
  curv_ratio.reserve(grid.size());
  for (const double t : grid) {
    const double v = phi.value(t);
    if (!(v > 0.0)) {
      std::ostringstream os;
      os << phi.name() << ": Phi(" << t << ") = " << v;
      throw Error(ErrorKind::DegenerateIndex, os.str());
    }
    const double r = t * phi.flux(t) / v;
    rep.l = std::min(rep.l, r);
    rep.m_check = std::max(rep.m_check, r);
    const double c = phi.curvature(t) / phi.density(t);
    curv_ratio.push_back(c);
    lo_ratio = std::min(lo_ratio, c);
    hi_ratio = std::max(hi_ratio, c);
  }
  rep.m = 1.0 + hi_ratio;
  rep.ell = 1.0 + lo_ratio;
  rep.l_star = rep.l < dim ? dim * rep.l / (dim - rep.l) : std::numeric_limits<double>::infinity();

  if (curv_ratio.size() >= 5) {
    const std::size_t start = curv_ratio.size() - curv_ratio.size() / 5;
    rep.m_tail_growing = curv_ratio.back() > curv_ratio[start] * (1.0 + 1e-9) + 1e-12;
  }

  rep.t2phi_convex = true;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double a = grid[i - 1], b = grid[i], c = grid[i + 1];
    const double ga = a * phi.flux(a), gb = b * phi.flux(b), gc = c * phi.flux(c);
    const double chord = ga + (gc - ga) * (b - a) / (c - a);
    if (gb > chord * (1.0 + 1e-9) + 1e-300) {
      rep.t2phi_convex = false;
      break;
    }
  }

  rep.delta2_phi_report = check_delta2(phi, grid);
  rep.delta2_phi = rep.delta2_phi_report.satisfied;
  const Complementary tilde(phi);
  const double s_lo = phi.flux(grid.front());
  const double s_hi = 0.5 * tilde.s_max();
  if (s_lo > 0.0 && s_hi > s_lo) {
    const auto sgrid = geometric_grid(s_lo, s_hi, static_cast<int>(grid.size()));
    rep.delta2_tilde_report = check_delta2(tilde, sgrid);
    rep.delta2_tilde = rep.delta2_tilde_report.satisfied;
  }
  return rep;
}

IndexReport indices(const NFunction& phi, int dim) {
  const auto grid = default_grid(phi);
  return indices(phi, grid, dim);
}

}  // namespace orlicz
