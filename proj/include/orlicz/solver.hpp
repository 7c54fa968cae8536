#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/energy.hpp"
#include "orlicz/nonlinearity.hpp"

namespace orlicz {

// ---- plateau witness -------------------------------------------------------

struct PlateauFunction {
  double t1 = 0.0;
  double ramp_width = 0.0;
  int level = 0;  // 1-based shrink level that produced it, 0 when built directly
  std::vector<int> inner_nodes;
  DiscreteFunction profile;
};

/// t1 * min(1, dist(x, boundary) / ramp_width), per axis in 2D. The ramp width
/// is snapped to a whole number of cells.
PlateauFunction make_plateau(MeshPtr mesh, double t1, double ramp_width);

struct LambdaStar {
  double lambda_star = 0.0;
  double Q = 0.0;         // Q(u0)
  double F_integral = 0;  // int F(x, u0)
  PlateauFunction witness;
};

/// Inner region fraction k / (levels + 1), k = 1..levels; the first level with
/// int F(x, u0) > 0 wins. Throws NoPositivePlateau.
LambdaStar lambda_star(const NFunction& phi, const Rhs& f, MeshPtr mesh, double t1, int levels = 7);

/// I_lambda(u0), affine in lambda.
double witness_energy(const LambdaStar& ls, double lambda);

// ---- minimization ----------------------------------------------------------

struct DescentOptions {
  double tol = 1e-8;  // residual sup-norm
  int max_iter = 500;
  double armijo = 1e-4;
  double shrink = 0.5;
  int random_starts = 3;
  double perturbation = 0.3;
  std::uint64_t seed = 1;
  bool parallel = true;
  bool track_identity_gap = true;
};

struct DescentTrace {
  std::vector<double> energies;
  std::vector<double> residuals;
  std::vector<char> roundoff_step;  // step accepted on the residual at the energy roundoff floor
  double max_identity_gap = 0.0;    // relative, over accepted iterates
  int iterations = 0;
};

struct MinimizeResult {
  DiscreteFunction u;
  double energy = 0.0;
  double residual_norm = 0.0;
  DescentTrace trace;
  bool trivial = false;  // ||u||_inf < 1e-8
  int start_index = 0;   // 0: zero, 1: witness, 2..: perturbations
};

/// Newton-preconditioned descent with Armijo backtracking from one start.
/// Throws MaxIterations or NonDecreasingStep.
MinimizeResult descend(const EnergyFunctional& E, DiscreteFunction start, const DescentOptions& opt = {});

/// Multi-start descent (0, u0, seeded perturbations of u0); lowest energy wins.
MinimizeResult minimize_I(const EnergyFunctional& E, const DiscreteFunction& u0, const DescentOptions& opt = {});

// ---- mountain pass ---------------------------------------------------------

struct GeometryReport {
  double r = 0.0;
  double rho = 0.0;
  bool holds = false;
  std::vector<double> r_grid;
  std::vector<double> rho_by_r;
};

/// Samples J on gradient-Luxemburg spheres. Default radii are fractions of
/// min(||u1||, 1).
GeometryReport verify_mp_geometry(const EnergyFunctional& J, const DiscreteFunction& u1,
                                  std::vector<double> r_grid = {}, int samples = 200, std::uint64_t seed = 1);

struct MountainPassOptions {
  int path_points = 21;
  double tol = 1e-8;  // residual sup-norm at u2
  int max_iter = 400;
  int refinements = 3;  // path doublings before MaxIterations
  int max_path_points = 801;
  double rho = 0.0;     // geometry level; the path may not drop below it
  double level_tol = 1e-6;
};

struct MountainPassState {
  std::vector<DiscreteFunction> path;
  double level = 0.0;
  int argmax_index = 0;
  int iterations = 0;
  std::vector<double> levels;  // path maximum per iteration
  double max_identity_gap = 0.0;
};

struct MountainPassResult {
  DiscreteFunction u2;
  double c = 0.0;
  double residual_norm = 0.0;
  MountainPassState state;
};

/// String method from 0 to u1, then a climbing search and Newton polish at the
/// path maximum. Throws MaxIterations or CollapsedPath.
MountainPassResult mountain_pass(const EnergyFunctional& J, const DiscreteFunction& u1,
                                 const MountainPassOptions& opt = {});

// ---- pipeline --------------------------------------------------------------

enum class Outcome { Success, LambdaTooSmall, Failed };
std::string_view to_string(Outcome o);

struct SolverOptions {
  double tol = 1e-8;        // residual sup-norm for both solutions
  double level_tol = 1e-6;  // |c - I(u2)|, c >= rho - level_tol
  double order_tol = 1e-8;  // u2 <= u1 + order_tol
  double distinct_tol = 1e-4;
  double identity_tol = 1e-8;  // relative identity gap on iterates
  int plateau_levels = 7;
  int path_points = 21;
  int mp_max_iter = 400;
  int geometry_samples = 200;
  int random_starts = 3;
  std::uint64_t seed = 1;
  bool parallel = true;
  std::optional<double> t1;  // overrides the (f2) scan
  HypothesisOptions hypothesis;
};

struct SolverReport {
  Outcome outcome = Outcome::Failed;
  std::string message;
  Profile profile = Profile::T1;
  double lambda = 0.0;
  double lambda_star = 0.0;
  double t1 = 0.0;
  DiscreteFunction u0;
  DiscreteFunction u1;
  double I_u1 = 0.0;
  bool trivial_minimizer = false;
  std::optional<DiscreteFunction> u2;
  double I_u2 = 0.0;
  double c = 0.0;
  double residual_u1 = 0.0;
  double residual_u2 = 0.0;
  bool ordering_ok = false;
  double distinct_gap = 0.0;
  GeometryReport geometry;
  DomDiagnostics diag_u1, diag_u2;
  double max_identity_gap = 0.0;
  HypothesisReport hypothesis;
  double sup_u1 = 0.0, sup_u2 = 0.0;
  int descent_iterations = 0;
  int mp_iterations = 0;
};

/// lambda_star -> minimize_I -> truncate -> verify_mp_geometry -> mountain_pass,
/// then the invariant checks. Throws HypothesisFailed; stage errors propagate.
SolverReport solve_two(const NFunction& phi, NonlinearityPtr f, MeshPtr mesh, double lambda, Profile profile,
                       const SolverOptions& opt = {});

}  // namespace orlicz
