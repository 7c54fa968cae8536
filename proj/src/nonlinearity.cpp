#include "orlicz/nonlinearity.hpp"

#include <cmath>
#include <sstream>

#include "orlicz/error.hpp"

namespace orlicz {
namespace {

double param(const ParamMap& params, std::string_view model, std::string_view key) {
  const auto it = params.find(key);
  if (it == params.end()) {
    std::ostringstream os;
    os << model << ": missing parameter '" << key << "'";
    throw Error(ErrorKind::ParamOutOfRange, os.str());
  }
  return it->second;
}

double pos(double t) { return t > 0.0 ? t : 0.0; }

std::shared_ptr<Nonlinearity> make(std::string model, const ParamMap& params) {
  auto n = std::make_shared<Nonlinearity>();
  n->model = std::move(model);
  n->params = params;
  return n;
}

NonlinearityPtr pq(const ParamMap& params) {
  const double p = param(params, "pq", "p"), q = param(params, "pq", "q");
  if (!(q > 1.0 && q < p)) throw Error(ErrorKind::ParamOutOfRange, "pq: parameters violate 1 < q < p");
  auto n = make("pq", params);
  n->f_fn = [p, q](Point, double t) {
    const double s = pos(t);
    return std::pow(s, p - 1.0) - std::pow(s, q - 1.0);
  };
  n->F_fn = [p, q](Point, double t) {
    const double s = pos(t);
    return std::pow(s, p) / p - std::pow(s, q) / q;
  };
  n->df_fn = [p, q](Point, double t) {
    if (t <= 0.0) return 0.0;
    return (p - 1.0) * std::pow(t, p - 2.0) - (q - 1.0) * std::pow(t, q - 2.0);
  };
  n->growth = catalog("power", {{"p", p}});
  return n;
}

NonlinearityPtr pqlog(const ParamMap& params) {
  const double p = param(params, "pqlog", "p"), q = param(params, "pqlog", "q");
  if (!(q > 1.0 && q < p)) throw Error(ErrorKind::ParamOutOfRange, "pqlog: parameters violate 1 < q < p");
  auto n = make("pqlog", params);
  n->F_fn = [p, q](Point, double t) {
    const double s = pos(t);
    return std::pow(s, p) * std::log1p(s) - std::pow(s, q);
  };
  n->f_fn = [p, q](Point, double t) {
    const double s = pos(t);
    if (s == 0.0) return 0.0;
    return p * std::pow(s, p - 1.0) * std::log1p(s) + std::pow(s, p) / (1.0 + s) - q * std::pow(s, q - 1.0);
  };
  n->df_fn = [p, q](Point, double t) {
    if (t <= 0.0) return 0.0;
    const double u = 1.0 + t;
    return p * (p - 1.0) * std::pow(t, p - 2.0) * std::log1p(t) + 2.0 * p * std::pow(t, p - 1.0) / u -
           std::pow(t, p) / (u * u) - q * (q - 1.0) * std::pow(t, q - 2.0);
  };
  n->growth = catalog("plog", {{"p", p}});
  return n;
}

NonlinearityPtr sublinear(const ParamMap& params) {
  const double k = param(params, "sublinear", "kappa"), s = param(params, "sublinear", "s");
  if (!(k > 0.0 && s > 2.0 && s < 3.0))
    throw Error(ErrorKind::ParamOutOfRange, "sublinear: parameters violate kappa > 0, 2 < s < 3");
  auto n = make("sublinear", params);
  n->F_fn = [k, s](Point, double t) {
    const double a = pos(t);
    return a * a * (a - k) * std::pow(1.0 + a, -s);
  };
  n->f_fn = [k, s](Point, double t) {
    const double a = pos(t);
    const double u = 1.0 + a;
    return (3.0 * a * a - 2.0 * k * a) * std::pow(u, -s) - s * (a * a * a - k * a * a) * std::pow(u, -s - 1.0);
  };
  n->df_fn = [k, s](Point, double t) {
    if (t <= 0.0) return 0.0;
    const double u = 1.0 + t;
    return (6.0 * t - 2.0 * k) * std::pow(u, -s) - 2.0 * s * (3.0 * t * t - 2.0 * k * t) * std::pow(u, -s - 1.0) +
           s * (s + 1.0) * (t * t * t - k * t * t) * std::pow(u, -s - 2.0);
  };
  return n;
}

NonlinearityPtr constant(const ParamMap& params) {
  const double c = param(params, "constant", "c");
  auto n = make("constant", params);
  n->f_fn = [c](Point, double) { return c; };
  n->F_fn = [c](Point, double t) { return c * t; };
  n->df_fn = [](Point, double) { return 0.0; };
  return n;
}

}  // namespace

double Rhs::df(const Site& s, double t) const {
  const double h = 1e-6 * std::max(1.0, std::fabs(t));
  return (f(s, t + h) - f(s, t - h)) / (2.0 * h);
}

double Nonlinearity::df(const Site& s, double t) const {
  return df_fn ? df_fn(s.x, t) : Rhs::df(s, t);
}

std::vector<std::string> model_f_names() { return {"pq", "pqlog", "sublinear", "constant"}; }

NonlinearityPtr model_f(std::string_view name, const ParamMap& params) {
  if (name == "pq") return pq(params);
  if (name == "pqlog") return pqlog(params);
  if (name == "sublinear") return sublinear(params);
  if (name == "constant") return constant(params);
  std::ostringstream os;
  os << "unknown nonlinearity '" << name << "'; known:";
  for (const auto& n : model_f_names()) os << ' ' << n;
  throw Error(ErrorKind::UnknownModel, os.str());
}

NonlinearityPtr custom_f(std::string name, RhsFn f, RhsFn F, RhsFn df) {
  auto n = std::make_shared<Nonlinearity>();
  n->model = std::move(name);
  n->f_fn = std::move(f);
  n->F_fn = std::move(F);
  n->df_fn = std::move(df);
  return n;
}

TruncatedNonlinearity::TruncatedNonlinearity(NonlinearityPtr base, DiscreteFunction ceiling)
    : base_(std::move(base)), ceiling_(std::move(ceiling)), at_quad_(ceiling_.at_quadrature()) {
  for (const double v : ceiling_.values) negative_ = negative_ || v < 0.0;
}

double TruncatedNonlinearity::ceiling_at(const Site& s) const {
  return s.quad >= 0 ? at_quad_[s.quad] : ceiling_.evaluate(s.x);
}

double TruncatedNonlinearity::f(const Site& s, double t) const {
  if (t < 0.0) return 0.0;
  const double c = ceiling_at(s);
  return base_->f(s, t <= c ? t : c);
}

double TruncatedNonlinearity::F(const Site& s, double t) const {
  if (t < 0.0) return 0.0;
  const double c = ceiling_at(s);
  if (t <= c) return base_->F(s, t);
  const double c0 = std::max(c, 0.0);
  return base_->F(s, c0) + base_->f(s, c) * (t - c0);
}

double TruncatedNonlinearity::df(const Site& s, double t) const {
  if (t < 0.0 || t > ceiling_at(s)) return 0.0;
  return base_->df(s, t);
}

std::shared_ptr<const TruncatedNonlinearity> truncate(NonlinearityPtr f, const DiscreteFunction& u1) {
  return std::make_shared<TruncatedNonlinearity>(std::move(f), u1);
}

}  // namespace orlicz
