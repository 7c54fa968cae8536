#pragma once

#include <memory>
#include <vector>

#include <Eigen/SparseCore>

#include "orlicz/mesh.hpp"
#include "orlicz/nfunction.hpp"
#include "orlicz/nonlinearity.hpp"

namespace orlicz {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// I(u) = int Phi(|grad u|) - lambda int F(x, u), or J with a truncated rhs.
struct EnergyFunctional {
  NFunction phi;
  std::shared_ptr<const Rhs> rhs;
  double lambda = 1.0;
  MeshPtr mesh;
};

/// Throws ParamOutOfRange unless lambda > 0.
EnergyFunctional make_energy(NFunction phi, std::shared_ptr<const Rhs> rhs, double lambda, MeshPtr mesh);

/// Q(u) = int Phi(|grad u|).
double gradient_modular(const NFunction& phi, const DiscreteFunction& u);
/// int F(x, u) by 3-point Gauss per element.
double rhs_integral(const Rhs& rhs, const DiscreteFunction& u);

double energy(const EnergyFunctional& E, const DiscreteFunction& u);

/// r_i = int phi(|grad u|) grad u . grad v_i - lambda int f(x,u) v_i; boundary rows 0.
std::vector<double> residual(const EnergyFunctional& E, const DiscreteFunction& u);
/// Same with an arbitrary rhs and lambda, used for checks against the untruncated f.
std::vector<double> residual(const NFunction& phi, const Rhs& rhs, double lambda, const DiscreteFunction& u);

enum class HessianKind {
  Exact,
  // Keeps only the positive semidefinite part of the lambda f' term.
  Convexified,
};

/// Second variation with Dirichlet rows and columns replaced by the identity.
SparseMatrix hessian(const EnergyFunctional& E, const DiscreteFunction& u, HessianKind kind);

/// P1 Laplacian with the identity on Dirichlet rows; the H^1_0 metric.
SparseMatrix stiffness(const Mesh& mesh);

struct DomDiagnostics {
  double modular_phi = 0.0;    // int Phi(|grad u|)
  double modular_tilde = 0.0;  // int Phi~(phi(|grad u|) |grad u|)
  double identity_gap = 0.0;   // |int phi |grad u|^2 - (modular_phi + modular_tilde)|
  double relative_gap = 0.0;   // identity_gap / int phi |grad u|^2
};

DomDiagnostics dom_diagnostics(const NFunction& phi, const DiscreteFunction& u);

}  // namespace orlicz
