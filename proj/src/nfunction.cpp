#include "orlicz/nfunction.hpp"

#include <cmath>
#include <sstream>

#include "orlicz/error.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {

struct NFunction::Impl {
  Density density;
  ClosedForm closed;
  std::string name;
  ParamMap params;
  double domain_hint = 0.0;
  int quad_points = 10;
  // Cumulative integral of s phi(s) at breaks[k] = 2^(kFirstExponent + k).
  std::vector<double> breaks;
  std::vector<double> cumulative;

  static constexpr int kFirstExponent = -40;

  double integrand(double s) const { return s * density.eval(s); }

  double integrate(double a, double b) const {
    return quadrature::integrate([this](double s) { return integrand(s); }, a, b, quad_points).value;
  }

  double quadrature_value(double t) const {
    if (breaks.empty() || t < breaks.front()) return integrate(0.0, t);
    const int k = std::min<int>(static_cast<int>(std::floor(std::log2(t))) - kFirstExponent,
                                static_cast<int>(breaks.size()) - 1);
    const int idx = std::max(0, k);
    if (breaks[idx] == t) return cumulative[idx];
    return cumulative[idx] + integrate(breaks[idx], t);
  }

  double value(double a) const { return closed.value ? closed.value(a) : quadrature_value(a); }

  void build_table(double limit) {
    double b = std::ldexp(1.0, kFirstExponent);
    double acc = integrate(0.0, b);
    breaks.push_back(b);
    cumulative.push_back(acc);
    for (int e = kFirstExponent + 1; e < 1020 && b < limit && acc < kOverflowValue; ++e) {
      const double next = std::ldexp(1.0, e);
      acc += integrate(b, next);
      b = next;
      breaks.push_back(b);
      cumulative.push_back(acc);
    }
  }
};

namespace {

void check_overflow(const NFunction::Impl& impl, double a) {
  if (a > impl.domain_hint * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << impl.name << ": argument " << a << " exceeds domain_hint " << impl.domain_hint;
    throw Error(ErrorKind::OverflowDomain, os.str());
  }
}

// Geometric bisection for the t where value(t) crosses kOverflowValue.
double overflow_point(const std::function<double(double)>& value, double lo, double hi) {
  const auto over = [&](double t) { return !(value(t) < kOverflowValue); };
  if (!over(hi)) return hi;
  if (over(lo)) return lo;
  for (int i = 0; i < 200 && hi > lo * (1.0 + 1e-14); ++i) {
    const double mid = (hi / lo > 4.0) ? std::sqrt(lo) * std::sqrt(hi) : 0.5 * (lo + hi);
    if (over(mid))
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

// With `until_overflow` the scan ends quietly at the first infinite density.
void validate_density(const NFunction::Impl& impl, double hi, bool until_overflow = false) {
  const auto grid = geometric_grid(1e-6, hi, 400);
  double prev = 0.0;
  for (const double t : grid) {
    const double phi = impl.density.eval(t);
    if (until_overflow && std::isinf(phi)) return;
    if (!(phi > 0.0) || !std::isfinite(phi)) {
      std::ostringstream os;
      os << impl.name << ": density not positive at t=" << t;
      throw Error(ErrorKind::NonMonotoneDensity, os.str());
    }
    const double flux = impl.closed.flux ? impl.closed.flux(t) : t * phi;
    if (!(flux > prev)) {
      std::ostringstream os;
      os << impl.name << ": t*phi(t) not increasing at t=" << t;
      throw Error(ErrorKind::NonMonotoneDensity, os.str());
    }
    prev = flux;
  }
}

NFunction finish(std::shared_ptr<NFunction::Impl> impl) {
  if (!impl->density.eval) throw Error(ErrorKind::ParamOutOfRange, "density has no eval");
  const double hint = impl->density.domain_hint;
  if (impl->closed.value) {
    const double hi = std::isfinite(hint) ? hint : 1e300;
    impl->domain_hint = overflow_point(impl->closed.value, 1e-3, hi);
  } else {
    // Cheap rejection before the table walks out to the overflow point.
    validate_density(*impl, std::min(hint, 1e6), true);
    impl->build_table(hint);
    const double hi = std::min(hint, impl->breaks.back());
    const double lo = impl->breaks.size() > 1 ? impl->breaks[impl->breaks.size() - 2] : 1e-3;
    if (!(impl->cumulative.back() < kOverflowValue))
      impl->domain_hint = overflow_point([&](double t) { return impl->quadrature_value(t); }, lo, hi);
    else
      impl->domain_hint = hi;
  }
  validate_density(*impl, impl->domain_hint);
  return NFunction(std::move(impl));
}

}  // namespace

double NFunction::value(double t) const {
  const double a = std::fabs(t);
  if (a == 0.0) return 0.0;
  check_overflow(*impl_, a);
  return impl_->value(a);
}

double NFunction::flux(double t) const {
  const double a = std::fabs(t);
  if (a == 0.0) return 0.0;
  check_overflow(*impl_, a);
  return impl_->closed.flux ? impl_->closed.flux(a) : a * impl_->density.eval(a);
}

double NFunction::density(double t) const {
  double a = std::fabs(t);
  if (a == 0.0) a = 1e-300;
  check_overflow(*impl_, a);
  return impl_->density.eval(a);
}

double NFunction::curvature(double t) const {
  double a = std::fabs(t);
  if (a == 0.0) a = 1e-300;
  check_overflow(*impl_, a);
  if (impl_->closed.curvature) return impl_->closed.curvature(a);
  if (impl_->density.deriv) return impl_->density.eval(a) + a * impl_->density.deriv(a);
  const double h = 1e-6 * a;
  const double hi = std::min(a + h, impl_->domain_hint);
  const double lo = a - h;
  return (hi * impl_->density.eval(hi) - lo * impl_->density.eval(lo)) / (hi - lo);
}

double NFunction::domain_hint() const { return impl_->domain_hint; }
const std::string& NFunction::name() const { return impl_->name; }
const ParamMap& NFunction::params() const { return impl_->params; }
const Density& NFunction::density_fn() const { return impl_->density; }
bool NFunction::has_closed_form() const { return static_cast<bool>(impl_->closed.value); }

NFunction build_nfunction(Density density, int quad_points, std::string name, ParamMap params) {
  auto impl = std::make_shared<NFunction::Impl>();
  impl->density = std::move(density);
  impl->name = std::move(name);
  impl->params = std::move(params);
  impl->quad_points = quad_points;
  return finish(std::move(impl));
}

NFunction build_nfunction(Density density, ClosedForm closed, std::string name, ParamMap params) {
  auto impl = std::make_shared<NFunction::Impl>();
  impl->density = std::move(density);
  impl->closed = std::move(closed);
  impl->name = std::move(name);
  impl->params = std::move(params);
  return finish(std::move(impl));
}

std::vector<double> geometric_grid(double lo, double hi, int count) {
  std::vector<double> grid(count);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i) grid[i] = std::exp(llo + (lhi - llo) * i / (count - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> default_grid(const NFunction& phi) {
  return geometric_grid(1e-6, phi.domain_hint(), 2000);
}

}  // namespace orlicz
