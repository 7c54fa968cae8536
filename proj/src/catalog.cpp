#include <cmath>
#include <sstream>

#include "orlicz/error.hpp"
#include "orlicz/nfunction.hpp"

namespace orlicz {
namespace {

double require(const ParamMap& params, std::string_view model, std::string_view key) {
  const auto it = params.find(key);
  if (it == params.end()) {
    std::ostringstream os;
    os << model << ": missing parameter '" << key << "'";
    throw Error(ErrorKind::ParamOutOfRange, os.str());
  }
  return it->second;
}

void range_error(std::string_view model, std::string_view range) {
  std::ostringstream os;
  os << model << ": parameters violate " << range;
  throw Error(ErrorKind::ParamOutOfRange, os.str());
}

const double* find_dim(const ParamMap& params) {
  const auto it = params.find("N");
  return it == params.end() ? nullptr : &it->second;
}

NFunction power(const ParamMap& params) {
  const double p = require(params, "power", "p");
  if (!(p > 1.0)) range_error("power", "p > 1");
  Density d{[p](double t) { return std::pow(t, p - 2.0); },
            [p](double t) { return (p - 2.0) * std::pow(t, p - 3.0); }};
  ClosedForm c{[p](double t) { return std::pow(t, p) / p; },
               [p](double t) { return std::pow(t, p - 1.0); },
               [p](double t) { return (p - 1.0) * std::pow(t, p - 2.0); }};
  return build_nfunction(std::move(d), std::move(c), "power", params);
}

NFunction powersum(const ParamMap& params) {
  const double p = require(params, "powersum", "p");
  const double q = require(params, "powersum", "q");
  if (!(p > 1.0 && q > p)) range_error("powersum", "1 < p < q");
  if (const double* n = find_dim(params)) {
    const double pstar = p < *n ? *n * p / (*n - p) : std::numeric_limits<double>::infinity();
    if (!(q < *n && q < pstar)) range_error("powersum", "q < N and q in (p, p*)");
  }
  Density d{[p, q](double t) { return std::pow(t, p - 2.0) + std::pow(t, q - 2.0); },
            [p, q](double t) { return (p - 2.0) * std::pow(t, p - 3.0) + (q - 2.0) * std::pow(t, q - 3.0); }};
  ClosedForm c{[p, q](double t) { return std::pow(t, p) / p + std::pow(t, q) / q; },
               [p, q](double t) { return std::pow(t, p - 1.0) + std::pow(t, q - 1.0); },
               [p, q](double t) {
                 return (p - 1.0) * std::pow(t, p - 2.0) + (q - 1.0) * std::pow(t, q - 2.0);
               }};
  return build_nfunction(std::move(d), std::move(c), "powersum", params);
}

NFunction genpower(const ParamMap& params) {
  const double a = require(params, "genpower", "alpha");
  if (!(a > 1.0)) range_error("genpower", "alpha in (1, N/(N-2))");
  if (const double* n = find_dim(params); n && *n > 2.0 && !(a < *n / (*n - 2.0)))
    range_error("genpower", "alpha in (1, N/(N-2))");
  Density d{[a](double t) { return 2.0 * a * std::pow(1.0 + t * t, a - 1.0); },
            [a](double t) { return 4.0 * a * (a - 1.0) * t * std::pow(1.0 + t * t, a - 2.0); }};
  ClosedForm c{[a](double t) { return std::expm1(a * std::log1p(t * t)); },
               [a](double t) { return 2.0 * a * t * std::pow(1.0 + t * t, a - 1.0); },
               [a](double t) {
                 const double s = 1.0 + t * t;
                 return 2.0 * a * std::pow(s, a - 1.0) + 4.0 * a * (a - 1.0) * t * t * std::pow(s, a - 2.0);
               }};
  return build_nfunction(std::move(d), std::move(c), "genpower", params);
}

NFunction plog(const ParamMap& params) {
  const double p = require(params, "plog", "p");
  if (!(p > 1.0)) range_error("plog", "p > 1");
  if (const double* n = find_dim(params)) {
    const double lower = (-1.0 + std::sqrt(1.0 + 4.0 * *n)) / 2.0;
    if (!(*n >= 3.0 && p > lower && p < *n - 1.0))
      range_error("plog", "1 < (-1+sqrt(1+4N))/2 < p < N-1, N >= 3");
  }
  auto flux = [p](double t) { return p * std::pow(t, p - 1.0) * std::log1p(t) + std::pow(t, p) / (1.0 + t); };
  auto curv = [p](double t) {
    return p * (p - 1.0) * std::pow(t, p - 2.0) * std::log1p(t) + 2.0 * p * std::pow(t, p - 1.0) / (1.0 + t) -
           std::pow(t, p) / ((1.0 + t) * (1.0 + t));
  };
  Density d{[p](double t) { return p * std::pow(t, p - 2.0) * std::log1p(t) + std::pow(t, p - 1.0) / (1.0 + t); },
            {}};
  d.deriv = [flux, curv](double t) { return (curv(t) - flux(t) / t) / t; };
  ClosedForm c{[p](double t) { return std::pow(t, p) * std::log1p(t); }, flux, curv};
  return build_nfunction(std::move(d), std::move(c), "plog", params);
}

NFunction sinh_model(const ParamMap& params) {
  const double a = require(params, "sinh", "alpha");
  const double b = require(params, "sinh", "beta");
  if (!(a >= 0.0 && a <= 1.0 && b > 0.0)) range_error("sinh", "0 <= alpha <= 1 and beta > 0");
  Density d{[a, b](double t) { return std::pow(t, -a) * std::pow(std::asinh(t), b); },
            [a, b](double t) {
              const double s = std::asinh(t);
              return -a * std::pow(t, -a - 1.0) * std::pow(s, b) +
                     std::pow(t, -a) * b * std::pow(s, b - 1.0) / std::sqrt(1.0 + t * t);
            }};
  // No closed form for Phi: value comes from quadrature.
  ClosedForm c{{},
               [a, b](double t) { return std::pow(t, 1.0 - a) * std::pow(std::asinh(t), b); },
               [a, b](double t) {
                 const double s = std::asinh(t);
                 return (1.0 - a) * std::pow(t, -a) * std::pow(s, b) +
                        std::pow(t, 1.0 - a) * b * std::pow(s, b - 1.0) / std::sqrt(1.0 + t * t);
               }};
  return build_nfunction(std::move(d), std::move(c), "sinh", params);
}

NFunction exp_model(const ParamMap& params) {
  Density d{[](double t) { return std::exp(t * t); }, [](double t) { return 2.0 * t * std::exp(t * t); }};
  ClosedForm c{[](double t) { return 0.5 * std::expm1(t * t); },
               [](double t) { return t * std::exp(t * t); },
               [](double t) { return std::exp(t * t) * (1.0 + 2.0 * t * t); }};
  return build_nfunction(std::move(d), std::move(c), "exp", params);
}

NFunction loglinear(const ParamMap& params) {
  auto eval = [](double t) { return std::log1p(t) / t + 1.0 / (1.0 + t); };
  auto curv = [](double t) { return 1.0 / (1.0 + t) + 1.0 / ((1.0 + t) * (1.0 + t)); };
  Density d{eval, [eval, curv](double t) {
              if (t < 1e-4) return -1.5 + 8.0 * t / 3.0 - 3.75 * t * t;
              return (curv(t) - eval(t)) / t;
            }};
  ClosedForm c{[](double t) { return t * std::log1p(t); },
               [](double t) { return std::log1p(t) + t / (1.0 + t); }, curv};
  return build_nfunction(std::move(d), std::move(c), "loglinear", params);
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"power", "powersum", "genpower", "plog", "sinh", "exp", "loglinear"};
}

NFunction catalog(std::string_view name, const ParamMap& params) {
  if (name == "power") return power(params);
  if (name == "powersum") return powersum(params);
  if (name == "genpower") return genpower(params);
  if (name == "plog") return plog(params);
  if (name == "sinh") return sinh_model(params);
  if (name == "exp") return exp_model(params);
  if (name == "loglinear") return loglinear(params);
  std::ostringstream os;
  os << "unknown N-function '" << name << "'; known:";
  for (const auto& n : catalog_names()) os << ' ' << n;
  throw Error(ErrorKind::UnknownModel, os.str());
}

}  // namespace orlicz
