#include <cmath>
#include <future>
#include <random>

#include "orlicz/error.hpp"
#include "orlicz/kernels.hpp"
#include "orlicz/solver.hpp"
#include "solver_detail.hpp"

namespace orlicz {

namespace detail {

double safe_energy(const EnergyFunctional& E, const DiscreteFunction& u) {
  try {
    const double v = energy(E, u);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OverflowDomain) throw;
    return std::numeric_limits<double>::infinity();
  }
}

Eigen::Map<const Eigen::VectorXd> view(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

namespace {

bool positive_definite(const Eigen::SimplicialLDLT<SparseMatrix>& f) {
  return f.info() == Eigen::Success && (f.vectorD().array() > 0.0).all();
}

std::vector<double> solved(const Eigen::SimplicialLDLT<SparseMatrix>& f, const std::vector<double>& r) {
  const Eigen::VectorXd d = -f.solve(view(r));
  return std::vector<double>(d.data(), d.data() + d.size());
}

bool usable(const std::vector<double>& d, const std::vector<double>& r) {
  for (const double v : d)
    if (!std::isfinite(v)) return false;
  return kernels::dot(d, r) < 0.0;
}

double mean_interior_diag(const SparseMatrix& A, const Mesh& m) {
  double s = 0.0;
  for (const int i : m.interior_nodes) s += std::fabs(A.coeff(i, i));
  return m.interior_nodes.empty() ? 0.0 : s / m.interior_nodes.size();
}

}  // namespace

std::vector<double> descent_direction(const EnergyFunctional& E, const DiscreteFunction& u,
                                      const std::vector<double>& r, const SparseMatrix& K, double& mu,
                                      bool allow_newton) {
  Eigen::SimplicialLDLT<SparseMatrix> ldlt;
  if (allow_newton) {
    ldlt.compute(hessian(E, u, HessianKind::Exact));
    if (positive_definite(ldlt)) {
      auto d = solved(ldlt, r);
      if (usable(d, r)) return d;
    }
  }
  const SparseMatrix Hc = hessian(E, u, HessianKind::Convexified);
  const double kd = mean_interior_diag(K, *u.mesh);
  const double scale = kd > 0.0 ? std::max(mean_interior_diag(Hc, *u.mesh), 1e-300) / kd : 1.0;
  for (int attempt = 0; attempt < 40; ++attempt) {
    const SparseMatrix M = Hc + (mu * scale) * K;
    ldlt.compute(M);
    if (positive_definite(ldlt)) {
      auto d = solved(ldlt, r);
      if (usable(d, r)) return d;
    }
    mu = std::max(mu * 10.0, 1e-10);
  }
  // Plain H^1_0 gradient.
  ldlt.compute(K);
  return solved(ldlt, r);
}

double metric_norm(const SparseMatrix& K, const std::vector<double>& v) {
  const Eigen::VectorXd kv = K * view(v);
  return std::sqrt(std::max(0.0, kernels::dot(v, std::span<const double>(kv.data(), kv.size()))));
}

}  // namespace detail

MinimizeResult descend(const EnergyFunctional& E, DiscreteFunction u, const DescentOptions& opt) {
  using detail::safe_energy;
  MinimizeResult out;
  DescentTrace& tr = out.trace;
  const SparseMatrix K = stiffness(*E.mesh);
  double mu = 0.0;
  double I = energy(E, u);
  auto r = residual(E, u);
  auto record = [&] {
    tr.energies.push_back(I);
    tr.residuals.push_back(kernels::max_abs(r));
    if (opt.track_identity_gap)
      tr.max_identity_gap = std::max(tr.max_identity_gap, dom_diagnostics(E.phi, u).relative_gap);
  };
  record();
  tr.roundoff_step.push_back(0);
  DiscreteFunction trial(E.mesh, true);
  for (int it = 0;; ++it) {
    if (kernels::max_abs(r) <= opt.tol) break;
    if (it >= opt.max_iter) {
      throw Error(ErrorKind::MaxIterations,
                  "descent stopped at residual " + std::to_string(kernels::max_abs(r)) + " after " +
                      std::to_string(it) + " iterations");
    }
    // Below this the energy cannot rank two iterates.
    const double floor = 1e-12 * (std::fabs(I) + gradient_modular(E.phi, u) + 1e-300);
    const double r_norm = kernels::max_abs(r);
    std::vector<double> d;
    std::vector<double> rt;
    bool accepted = false;
    char roundoff = 0;
    double alpha = 1.0;
    double It = 0.0;
    // A failed search retries with a more strongly regularized direction.
    for (int retry = 0; retry < 8 && !accepted; ++retry) {
      if (retry > 0) mu = std::max(mu * 100.0, 1e-2);
      d = detail::descent_direction(E, u, r, K, mu, retry == 0);
      const double slope = kernels::dot(r, d);
      if (-slope <= floor) {
        // Predicted decrease is at the noise level: backtrack on the residual instead.
        alpha = 1.0;
        for (int k = 0; k < 12 && !accepted; ++k, alpha *= opt.shrink) {
          kernels::add_scaled(u.values, alpha, d, trial.values);
          It = safe_energy(E, trial);
          if (!(It <= I + floor)) continue;
          rt = residual(E, trial);
          if (kernels::max_abs(rt) < r_norm) accepted = true;
        }
        if (accepted) {
          alpha /= opt.shrink;
          roundoff = 1;
          break;
        }
      }
      alpha = 1.0;
      for (int k = 0; k < 60; ++k) {
        kernels::add_scaled(u.values, alpha, d, trial.values);
        It = safe_energy(E, trial);
        if (It <= I + opt.armijo * alpha * slope) {
          accepted = true;
          break;
        }
        alpha *= opt.shrink;
      }
    }
    if (!accepted)
      throw Error(ErrorKind::NonDecreasingStep, "line search failed at residual " + std::to_string(r_norm));
    if (alpha == 1.0)
      mu *= 0.1;
    else if (alpha < 1.0 / 16.0)
      mu = std::max(mu * 10.0, 1e-8);
    if (mu < 1e-14) mu = 0.0;
    std::swap(u.values, trial.values);
    I = It;
    r = roundoff ? std::move(rt) : residual(E, u);
    tr.roundoff_step.push_back(roundoff);
    record();
    tr.iterations = it + 1;
  }
  out.energy = I;
  out.residual_norm = kernels::max_abs(r);
  out.trivial = u.sup_norm() < 1e-8;
  out.u = std::move(u);
  return out;
}

MinimizeResult minimize_I(const EnergyFunctional& E, const DiscreteFunction& u0, const DescentOptions& opt) {
  std::vector<DiscreteFunction> starts;
  starts.emplace_back(E.mesh, true);
  starts.push_back(u0);
  for (int k = 0; k < opt.random_starts; ++k) {
    std::seed_seq seq{static_cast<std::uint64_t>(opt.seed), static_cast<std::uint64_t>(k)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    DiscreteFunction s = u0;
    for (const int i : E.mesh->interior_nodes) s.values[i] *= 1.0 + opt.perturbation * unif(rng);
    starts.push_back(std::move(s));
  }
  const auto policy = opt.parallel ? std::launch::async : std::launch::deferred;
  std::vector<std::future<MinimizeResult>> jobs;
  for (const auto& s : starts) jobs.push_back(std::async(policy, [&E, &opt, s] { return descend(E, s, opt); }));

  std::optional<MinimizeResult> best;
  std::exception_ptr first_error;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    try {
      MinimizeResult res = jobs[k].get();
      res.start_index = static_cast<int>(k);
      if (!best || res.energy < best->energy) best = std::move(res);
    } catch (const Error&) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (!best) std::rethrow_exception(first_error);
  return std::move(*best);
}

}  // namespace orlicz
