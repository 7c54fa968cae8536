#include <cmath>
#include <sstream>

#include "orlicz/error.hpp"
#include "orlicz/nonlinearity.hpp"

namespace orlicz {
namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double end_log_slope(const NFunction& phi, double a, double b) {
  return (std::log(phi.flux(b)) - std::log(phi.flux(a))) / (std::log(b) - std::log(a));
}

// Smallest alpha on a 0.05 lattice with |F| / Phi^alpha bounded at both ends of the grid.
void fit_f3(const Nonlinearity& f, const NFunction& phi, std::span<const double> grid,
            const std::vector<Point>& xs, HypothesisReport::F3& out) {
  std::vector<double> ts;
  for (const double t : grid)
    if (t <= phi.domain_hint()) ts.push_back(t);
  if (ts.size() < 10) return;
  const std::size_t k0 = ts.size() / 5, k1 = ts.size() - 1 - ts.size() / 5;
  for (int step = 1; step < 20; ++step) {
    const double alpha = 0.05 * step;
    bool ok = true;
    double c = 0.0;
    for (const Point& x : xs) {
      std::vector<double> r(ts.size());
      for (std::size_t i = 0; i < ts.size(); ++i) {
        r[i] = std::fabs(f.F_fn(x, ts[i])) / std::pow(phi.value(ts[i]), alpha);
        c = std::max(c, r[i]);
      }
      const double rmax = c > 0.0 ? c : 1.0;
      for (std::size_t i = k1; i + 1 < r.size(); ++i)
        if (r[i + 1] > r[i] + 1e-12 * rmax) ok = false;
      for (std::size_t i = 0; i < k0; ++i)
        if (r[i] > r[i + 1] + 1e-12 * rmax) ok = false;
      if (!std::isfinite(c)) ok = false;
    }
    if (ok) {
      out.alpha = alpha;
      out.C_est = c;
      out.holds = true;
      return;
    }
  }
}

}  // namespace

std::string_view to_string(Profile p) { return p == Profile::T1 ? "T1" : "T2"; }

HypothesisReport check_hypotheses(const Nonlinearity& f, const NFunction& phi, Profile profile,
                                  const HypothesisOptions& opt) {
  HypothesisReport rep;
  rep.profile = profile;
  rep.indices = indices(phi, opt.dim);
  const IndexReport& ix = rep.indices;
  const auto grid = geometric_grid(opt.t_lo, opt.t_hi, opt.points);
  const std::vector<Point> xs = opt.samples.empty() ? std::vector<Point>{Point{}} : opt.samples;

  // (phi1)-(phi4)
  rep.phi1 = true;
  for (std::size_t i = 1; i < ix.grid.size(); ++i)
    if (!(phi.flux(ix.grid[i]) > phi.flux(ix.grid[i - 1]))) rep.phi1 = false;
  const std::size_t n = ix.grid.size(), w = std::max<std::size_t>(n / 20, 1);
  rep.phi2 = end_log_slope(phi, ix.grid[0], ix.grid[w]) > 0.0 &&
             end_log_slope(phi, ix.grid[n - 1 - w], ix.grid[n - 1]) > 0.0;
  rep.phi3 = ix.l > 1.0 && ix.t2phi_convex;
  rep.phi4 = ix.ell >= 1.0 - 1e-9 && std::isfinite(ix.m);
  rep.m_below_l_star = ix.m < ix.l_star;

  // (f0)
  rep.f0.l = ix.l;
  if (f.growth) {
    const NFunction& A = *f.growth;
    double m_a = 0.0;
    for (const double t : default_grid(A)) m_a = std::max(m_a, t * A.flux(t) / A.value(t));
    rep.f0.m_A = m_a;
    rep.f0.margin = ix.l - m_a;
    rep.f0.holds = m_a > 1.0 && m_a < ix.l;
    double c = 0.0;
    for (const Point& x : xs)
      for (const double t : grid) c = std::max(c, std::fabs(f.f_fn(x, t)) / (A.flux(t) + 1.0));
    rep.f0.C_est = c;
  }

  // (f1): F strictly decreasing from 0 along the grid.
  rep.f1.delta = std::numeric_limits<double>::infinity();
  for (const Point& x : xs) {
    double prev = 0.0, delta = 0.0;
    for (const double t : grid) {
      const double v = f.F_fn(x, t);
      if (!(v < prev)) break;
      delta = t;
      prev = v;
    }
    rep.f1.delta = std::min(rep.f1.delta, delta);
  }
  rep.f1.holds = rep.f1.delta > 0.0;
  if (!rep.f1.holds) rep.f1.delta = 0.0;

  // (f2): t1 maximizes F / Phi among points with F > 0.
  {
    double best = 0.0;
    for (const double t : grid) {
      if (t > phi.domain_hint()) break;
      const double v = f.F_fn(xs.front(), t);
      if (!(v > 0.0)) continue;
      const double r = v / phi.value(t);
      if (r > best) {
        best = r;
        rep.f2.t1 = t;
      }
    }
    if (best > 0.0) {
      rep.f2.F_at_t1 = std::numeric_limits<double>::infinity();
      for (const Point& x : xs) rep.f2.F_at_t1 = std::min(rep.f2.F_at_t1, f.F_fn(x, rep.f2.t1));
      rep.f2.holds = rep.f2.F_at_t1 > 0.0;
    }
  }

  fit_f3(f, phi, grid, xs, rep.f3);

  auto need = [&](bool ok, std::string why) {
    if (!ok) rep.reasons.push_back(std::move(why));
  };
  need(rep.phi1, "(phi1) t*phi(t) not increasing");
  need(rep.phi2, "(phi2) t*phi(t) limits");
  if (profile == Profile::T1) {
    need(rep.phi3, ix.l > 1.0 ? "(phi3) t^2 phi(t) not convex" : "(phi3) l <= 1 (l=" + fmt(ix.l) + ")");
    if (!f.growth)
      need(false, "(f0) no growth function");
    else
      need(rep.f0.holds, rep.f0.m_A >= ix.l ? "(f0) m_A >= l (m_A=" + fmt(rep.f0.m_A) + ", l=" + fmt(ix.l) + ")"
                                            : "(f0) m_A <= 1");
  } else {
    need(rep.phi4, "(phi4) ell < 1 or m unbounded");
    need(rep.m_below_l_star, "m >= l* (m=" + fmt(ix.m) + ", l*=" + fmt(ix.l_star) + ")");
    need(rep.f3.holds, "(f3) no alpha < 1 with |F| <= C Phi^alpha");
  }
  need(rep.f1.holds, "(f1) F not decreasing near 0");
  need(rep.f2.holds, "(f2) no t1 with F(t1) > 0");
  rep.holds = rep.reasons.empty();
  return rep;
}

}  // namespace orlicz
