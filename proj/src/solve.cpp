#include <cmath>
#include <sstream>

#include "orlicz/error.hpp"
#include "orlicz/kernels.hpp"
#include "orlicz/solver.hpp"

namespace orlicz {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Success: return "Success";
    case Outcome::LambdaTooSmall: return "LambdaTooSmall";
    case Outcome::Failed: return "Failed";
  }
  return "Failed";
}

SolverReport solve_two(const NFunction& phi, NonlinearityPtr f, MeshPtr mesh, double lambda, Profile profile,
                       const SolverOptions& opt) {
  SolverReport rep;
  rep.profile = profile;
  rep.lambda = lambda;
  HypothesisOptions hopt = opt.hypothesis;
  hopt.dim = mesh->dim;
  rep.hypothesis = check_hypotheses(*f, phi, profile, hopt);
  if (!rep.hypothesis.holds) {
    std::ostringstream os;
    os << "profile " << to_string(profile) << ":";
    for (const auto& r : rep.hypothesis.reasons) os << ' ' << r << ';';
    throw Error(ErrorKind::HypothesisFailed, os.str());
  }
  rep.t1 = opt.t1.value_or(rep.hypothesis.f2.t1);

  const LambdaStar ls = lambda_star(phi, *f, mesh, rep.t1, opt.plateau_levels);
  rep.lambda_star = ls.lambda_star;
  rep.u0 = ls.witness.profile;

  const EnergyFunctional I = make_energy(phi, f, lambda, mesh);
  DescentOptions dopt;
  dopt.tol = opt.tol;
  dopt.seed = opt.seed;
  dopt.parallel = opt.parallel;
  dopt.random_starts = opt.random_starts;
  const MinimizeResult m = minimize_I(I, ls.witness.profile, dopt);
  rep.u1 = m.u;
  rep.I_u1 = m.energy;
  rep.trivial_minimizer = m.trivial;
  rep.residual_u1 = m.residual_norm;
  rep.sup_u1 = m.u.sup_norm();
  rep.diag_u1 = dom_diagnostics(phi, m.u);
  rep.max_identity_gap = m.trace.max_identity_gap;
  rep.descent_iterations = m.trace.iterations;

  if (!(lambda > ls.lambda_star)) {
    rep.outcome = Outcome::LambdaTooSmall;
    std::ostringstream os;
    os << "lambda " << lambda << " <= witness threshold " << ls.lambda_star << "; minimizer only";
    rep.message = os.str();
    return rep;
  }

  const auto g = truncate(f, m.u);
  const EnergyFunctional J = make_energy(phi, g, lambda, mesh);
  rep.geometry = verify_mp_geometry(J, m.u, {}, opt.geometry_samples, opt.seed);

  std::vector<std::string> failures;
  auto fail = [&](bool ok, const std::string& why) {
    if (!ok) failures.push_back(why);
  };
  fail(!g->negative_ceiling(), "u1 has negative nodes");
  fail(rep.I_u1 < 0.0, "I(u1) >= 0");
  fail(rep.geometry.holds, "no sampled radius with J >= rho > 0");

  MountainPassOptions mopt;
  mopt.path_points = opt.path_points;
  mopt.tol = opt.tol;
  mopt.max_iter = opt.mp_max_iter;
  mopt.rho = rep.geometry.holds ? rep.geometry.rho : 0.0;
  mopt.level_tol = opt.level_tol;
  const MountainPassResult mp = mountain_pass(J, m.u, mopt);
  rep.mp_iterations = mp.state.iterations;
  rep.c = mp.c;
  rep.u2 = mp.u2;
  rep.I_u2 = energy(I, mp.u2);
  rep.sup_u2 = mp.u2.sup_norm();
  rep.diag_u2 = dom_diagnostics(phi, mp.u2);
  rep.max_identity_gap = std::max({rep.max_identity_gap, mp.state.max_identity_gap, rep.diag_u1.relative_gap,
                                   rep.diag_u2.relative_gap});

  rep.residual_u1 = kernels::max_abs(residual(phi, *f, lambda, rep.u1));
  rep.residual_u2 = kernels::max_abs(residual(phi, *f, lambda, mp.u2));
  rep.ordering_ok = true;
  for (std::size_t k = 0; k < rep.u1.values.size(); ++k)
    if (mp.u2.values[k] > rep.u1.values[k] + opt.order_tol) rep.ordering_ok = false;
  rep.distinct_gap = kernels::max_abs((rep.u1 - mp.u2).values);

  fail(rep.c > 0.0, "c <= 0");
  fail(std::fabs(rep.c - rep.I_u2) <= opt.level_tol, "|c - I(u2)| above tolerance");
  fail(rep.c >= mopt.rho - opt.level_tol, "c < rho");
  fail(rep.ordering_ok, "u2 > u1 at some node");
  fail(rep.residual_u1 <= opt.tol, "residual(u1) above tolerance");
  fail(rep.residual_u2 <= opt.tol, "residual(u2) above tolerance");
  fail(rep.distinct_gap > opt.distinct_tol, "u1 and u2 not distinct");
  fail(rep.max_identity_gap <= opt.identity_tol, "identity gap above tolerance");

  if (failures.empty()) {
    rep.outcome = Outcome::Success;
    rep.message = "two solutions";
  } else {
    rep.outcome = Outcome::Failed;
    for (std::size_t k = 0; k < failures.size(); ++k) rep.message += (k ? "; " : "") + failures[k];
  }
  return rep;
}

}  // namespace orlicz
