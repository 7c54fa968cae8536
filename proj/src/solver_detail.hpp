#pragma once

#include <Eigen/SparseCholesky>
#include <vector>

#include "orlicz/energy.hpp"

namespace orlicz::detail {

/// Energy with OverflowDomain mapped to +inf.
double safe_energy(const EnergyFunctional& E, const DiscreteFunction& u);

Eigen::Map<const Eigen::VectorXd> view(const std::vector<double>& v);

/// Descent direction -M^{-1} r. Exact Newton when the Hessian is positive
/// definite and `allow_newton`; otherwise the convexified Hessian plus mu K,
/// raising mu until the factorization is positive definite.
std::vector<double> descent_direction(const EnergyFunctional& E, const DiscreteFunction& u,
                                      const std::vector<double>& r, const SparseMatrix& K, double& mu,
                                      bool allow_newton);

double metric_norm(const SparseMatrix& K, const std::vector<double>& v);

}  // namespace orlicz::detail
