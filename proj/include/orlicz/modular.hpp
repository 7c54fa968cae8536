#pragma once

#include <functional>

#include "orlicz/mesh.hpp"
#include "orlicz/nfunction.hpp"

namespace orlicz {

inline constexpr double kDefaultTol = 1e-8;

/// Young-type function evaluated on |.|; lets Phi~ share the machinery.
using YoungFn = std::function<double(double)>;

/// int Phi(scale |u|) (Gauss points) or int Phi(scale |grad u|) (exact per element).
double modular(const YoungFn& phi, const DiscreteFunction& u, bool of_gradient, double scale = 1.0);
double modular(const NFunction& phi, const DiscreteFunction& u, bool of_gradient, double scale = 1.0);

struct LuxemburgNorm {
  double value = 0.0;
  double lo = 0.0, hi = 0.0;  // final bisection bracket, value == hi
  double modular_at_value = 0.0;
};

/// inf{lambda > 0 : int Phi(|u|/lambda) <= 1}. Overflow while probing counts
/// as a modular above 1.
LuxemburgNorm luxemburg_norm(const YoungFn& phi, const DiscreteFunction& u, bool of_gradient);
LuxemburgNorm luxemburg_norm(const NFunction& phi, const DiscreteFunction& u, bool of_gradient);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// |int u v| <= 2 ||u||_Phi ||v||_Phi~.
InequalityCheck verify_holder(const NFunction& phi, const DiscreteFunction& u, const DiscreteFunction& v,
                              double tol = kDefaultTol);

/// int Phi(|u|) <= int Phi(d |grad u|); a right side past the domain counts as +inf.
/// Throws NonzeroBoundary.
InequalityCheck verify_modular_poincare(const NFunction& phi, const DiscreteFunction& u, double diam,
                                        double tol = kDefaultTol);

/// Pointwise Young inequality s t <= Phi(t) + Phi~(s) on all grid pairs.
InequalityCheck verify_young(const NFunction& phi, std::span<const double> t_grid, std::span<const double> s_grid,
                             double tol = kDefaultTol);

}  // namespace orlicz
