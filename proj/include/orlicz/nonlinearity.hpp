#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/mesh.hpp"
#include "orlicz/nfunction.hpp"

namespace orlicz {

// Where a right-hand side is evaluated. `quad` is the mesh quadrature id when
// the point is a Gauss point, -1 otherwise.
struct Site {
  Point x;
  int quad = -1;
};

/// Right-hand side seen by the energy: f (or g), its antiderivative, and df/dt.
class Rhs {
 public:
  virtual ~Rhs() = default;
  virtual double f(const Site& s, double t) const = 0;
  virtual double F(const Site& s, double t) const = 0;
  /// Central difference of f unless overridden.
  virtual double df(const Site& s, double t) const;
  virtual std::string name() const = 0;
};

using RhsFn = std::function<double(Point, double)>;

class Nonlinearity : public Rhs {
 public:
  std::string model;
  ParamMap params;
  RhsFn f_fn;
  RhsFn F_fn;
  RhsFn df_fn;  // optional
  /// Growth function A of (f0).
  std::optional<NFunction> growth;

  double f(const Site& s, double t) const override { return f_fn(s.x, t); }
  double F(const Site& s, double t) const override { return F_fn(s.x, t); }
  double df(const Site& s, double t) const override;
  std::string name() const override { return model; }
};

using NonlinearityPtr = std::shared_ptr<const Nonlinearity>;

/// Models:
///   "pq"(p, q):        f = t+^(p-1) - t+^(q-1), 1 < q < p
///   "pqlog"(p, q):     F = t+^p ln(1+t+) - t+^q, 1 < q < p
///   "sublinear"(kappa, s): F = t+^2 (t+ - kappa) / (1+t+)^s, kappa > 0, 2 < s < 3
///   "constant"(c):     f = c
/// Throws UnknownModel or ParamOutOfRange.
NonlinearityPtr model_f(std::string_view name, const ParamMap& params = {});
std::vector<std::string> model_f_names();

/// Right-hand side from user callables.
NonlinearityPtr custom_f(std::string name, RhsFn f, RhsFn F, RhsFn df = {});

/// g(x,t) = 0 for t < 0, f(x,t) on [0, u1(x)], f(x,u1(x)) above; G continuous.
class TruncatedNonlinearity : public Rhs {
 public:
  TruncatedNonlinearity(NonlinearityPtr base, DiscreteFunction ceiling);

  double f(const Site& s, double t) const override;
  double F(const Site& s, double t) const override;
  double df(const Site& s, double t) const override;
  std::string name() const override { return "truncated " + base_->name(); }

  double ceiling_at(const Site& s) const;
  const Nonlinearity& base() const { return *base_; }
  const DiscreteFunction& ceiling() const { return ceiling_; }
  /// True when some node of the ceiling is negative.
  bool negative_ceiling() const { return negative_; }

 private:
  NonlinearityPtr base_;
  DiscreteFunction ceiling_;
  std::vector<double> at_quad_;
  bool negative_ = false;
};

std::shared_ptr<const TruncatedNonlinearity> truncate(NonlinearityPtr f, const DiscreteFunction& u1);

enum class Profile { T1, T2 };
std::string_view to_string(Profile p);

struct HypothesisReport {
  Profile profile = Profile::T1;
  struct F0 {
    bool holds = false;
    double m_A = 0.0;
    double l = 0.0;
    double margin = 0.0;  // l - m_A
    double C_est = 0.0;   // sup |f| / (a(t) t + 1)
  } f0;
  struct F1 {
    double delta = 0.0;
    bool holds = false;
  } f1;
  struct F2 {
    double t1 = 0.0;
    double F_at_t1 = 0.0;
    bool holds = false;
  } f2;
  struct F3 {
    double alpha = 0.0;
    double C_est = 0.0;
    bool holds = false;
  } f3;
  bool phi1 = false, phi2 = false, phi3 = false, phi4 = false;
  bool m_below_l_star = false;
  IndexReport indices;
  std::vector<std::string> reasons;  // one entry per failed condition
  bool holds = false;
};

struct HypothesisOptions {
  double t_lo = 1e-4;
  double t_hi = 1e2;
  int points = 400;
  int dim = 1;
  std::vector<Point> samples{Point{}};  // x values scanned
};

HypothesisReport check_hypotheses(const Nonlinearity& f, const NFunction& phi, Profile profile,
                                  const HypothesisOptions& opt = {});

}  // namespace orlicz
