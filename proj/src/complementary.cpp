#include <cmath>
#include <sstream>

#include "orlicz/error.hpp"
#include "orlicz/nfunction.hpp"

namespace orlicz {
namespace {

// Root of flux(t) = s by Newton steps kept inside a shrinking bracket.
double solve_flux(const NFunction& phi, double s, double s_max) {
  const double dom = phi.domain_hint();
  if (s > s_max) {
    std::ostringstream os;
    os << phi.name() << ": no t with t*phi(t) = " << s << " below domain_hint (max " << s_max << ")";
    throw Error(ErrorKind::NoBracket, os.str());
  }
  double lo = 0.0, hi = std::min(1.0, dom);
  while (phi.flux(hi) < s) {
    lo = hi;
    hi = std::min(2.0 * hi, dom);
    if (lo == dom) return dom;
  }
  if (lo == 0.0) {
    lo = hi;
    while (lo > 1e-300 && phi.flux(lo) >= s) {
      hi = lo;
      lo *= 0.5;
    }
    if (phi.flux(lo) >= s) return lo;
  }
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double r = phi.flux(t) - s;
    if (r == 0.0) return t;
    if (r < 0.0)
      lo = t;
    else
      hi = t;
    const double d = phi.curvature(t);
    double next = t - r / d;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    // Newton stalls on roundoff once it is this close; finish by bisection.
    if (std::fabs(next - t) <= 1e-16 * t) {
      next = 0.5 * (lo + hi);
    }
    t = next;
  }
  return t;
}

}  // namespace

ConjugatePoint complementary(const NFunction& phi, double s) {
  if (!(s >= 0.0)) throw Error(ErrorKind::ParamOutOfRange, "complementary: s must be >= 0");
  if (s == 0.0) return {};
  const double t = solve_flux(phi, s, phi.flux(phi.domain_hint()));
  return {std::max(0.0, s * t - phi.value(t)), t};
}

Complementary::Complementary(NFunction base) : base_(std::move(base)), s_max_(base_.flux(base_.domain_hint())) {}

double Complementary::value(double s) const {
  s = std::fabs(s);
  if (s == 0.0) return 0.0;
  const double t = solve_flux(base_, s, s_max_);
  return std::max(0.0, s * t - base_.value(t));
}

double Complementary::argmax(double s) const {
  s = std::fabs(s);
  return s == 0.0 ? 0.0 : solve_flux(base_, s, s_max_);
}

NFunction Complementary::as_nfunction() const {
  const Complementary self = *this;
  Density d{[self](double s) { return self.argmax(s) / s; }, {}, s_max_ * (1.0 - 1e-9)};
  ClosedForm c{[self](double s) { return self.value(s); },
               [self](double s) { return self.argmax(s); },
               [self](double s) { return 1.0 / self.base().curvature(self.argmax(s)); }};
  return build_nfunction(std::move(d), std::move(c), base_.name() + "~", base_.params());
}

}  // namespace orlicz
