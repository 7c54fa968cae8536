#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/SparseLU>

#include "orlicz/error.hpp"
#include "orlicz/kernels.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/solver.hpp"
#include "solver_detail.hpp"

namespace orlicz {
namespace {

using detail::safe_energy;

// Random zero-trace direction; kind cycles through smooth, positive and rough.
DiscreteFunction sample_direction(const MeshPtr& mesh, std::mt19937_64& rng, int kind) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const Extent ex = mesh->extent;
  if (kind == 2) {
    DiscreteFunction v(mesh, true);
    for (const int i : mesh->interior_nodes) v.values[i] = unif(rng);
    return v;
  }
  std::array<double, 16> a{};
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = normal(rng) / (1.0 + j);
  const bool positive = kind == 1;
  return DiscreteFunction::interpolate(mesh, [&](Point p) {
    const double xi = (p.x - ex.x0) / (ex.x1 - ex.x0);
    const double eta = mesh->dim == 2 ? (p.y - ex.y0) / (ex.y1 - ex.y0) : 0.5;
    double s = 0.0;
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < (mesh->dim == 2 ? 4 : 1); ++k) {
        const double sy = mesh->dim == 2 ? std::sin((k + 1) * std::numbers::pi * eta) : 1.0;
        s += a[4 * k + j] * std::sin((j + 1) * std::numbers::pi * xi) * sy;
      }
    return positive ? std::fabs(s) : s;
  });
}

// Linear interpolation of the path at equal H^1_0 arclength.
std::vector<DiscreteFunction> reparametrize(const std::vector<DiscreteFunction>& path, const SparseMatrix& K,
                                            int points) {
  const std::size_t n = path.size();
  std::vector<double> s(n, 0.0);
  std::vector<double> diff(path[0].values.size());
  for (std::size_t i = 1; i < n; ++i) {
    kernels::add_scaled(path[i].values, -1.0, path[i - 1].values, diff);
    s[i] = s[i - 1] + detail::metric_norm(K, diff);
  }
  std::vector<DiscreteFunction> out;
  out.reserve(points);
  const double total = s.back();
  std::size_t seg = 1;
  for (int k = 0; k < points; ++k) {
    if (k == 0) {
      out.push_back(path.front());
      continue;
    }
    if (k == points - 1) {
      out.push_back(path.back());
      continue;
    }
    const double target = total * k / (points - 1);
    while (seg < n - 1 && s[seg] < target) ++seg;
    const double len = s[seg] - s[seg - 1];
    const double w = len > 0.0 ? (target - s[seg - 1]) / len : 0.0;
    DiscreteFunction v(path[0].mesh, true);
    kernels::add_scaled(path[seg].values, -1.0, path[seg - 1].values, diff);
    kernels::add_scaled(path[seg - 1].values, w, diff, v.values);
    out.push_back(std::move(v));
  }
  return out;
}

struct Polish {
  bool ok = false;
  DiscreteFunction u;
  double residual = 0.0;
  double max_gap = 0.0;
  std::string why;
};

// Golden-section search for the path maximum around node i, then Newton on r = 0.
Polish polish(const EnergyFunctional& J, const std::vector<DiscreteFunction>& path, int i,
              const DiscreteFunction& u1, const MountainPassOptions& opt) {
  Polish out;
  const auto& prev = path[i - 1];
  const auto& mid = path[i];
  const auto& next = path[i + 1];
  auto at = [&](double tau) {
    DiscreteFunction v(mid.mesh, true);
    if (tau < 0.0) {
      for (std::size_t k = 0; k < v.values.size(); ++k) v.values[k] = mid.values[k] + tau * (mid.values[k] - prev.values[k]);
    } else {
      for (std::size_t k = 0; k < v.values.size(); ++k) v.values[k] = mid.values[k] + tau * (next.values[k] - mid.values[k]);
    }
    return v;
  };
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = -1.0, b = 1.0;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = safe_energy(J, at(x1)), f2 = safe_energy(J, at(x2));
  for (int k = 0; k < 60; ++k) {
    if (f1 > f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = safe_energy(J, at(x1));
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = safe_energy(J, at(x2));
    }
  }
  DiscreteFunction u = at(0.5 * (a + b));
  if (!(safe_energy(J, u) >= safe_energy(J, mid))) u = mid;

  auto r = residual(J, u);
  double rn = std::sqrt(kernels::dot(r, r));
  const int n = u.mesh->node_count();
  for (int it = 0; it < 80 && kernels::max_abs(r) > opt.tol; ++it) {
    Eigen::SparseLU<SparseMatrix> lu;
    lu.compute(hessian(J, u, HessianKind::Exact));
    if (lu.info() != Eigen::Success) {
      out.why = "singular Hessian at the path maximum";
      return out;
    }
    const Eigen::VectorXd d = -lu.solve(detail::view(r));
    if (!d.allFinite()) {
      out.why = "non-finite Newton step";
      return out;
    }
    DiscreteFunction trial(u.mesh, true);
    bool moved = false;
    for (double alpha = 1.0; alpha > 1e-10; alpha *= 0.5) {
      for (int k = 0; k < n; ++k) trial.values[k] = u.values[k] + alpha * d[k];
      std::vector<double> rt;
      try {
        rt = residual(J, trial);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::OverflowDomain) throw;
        continue;
      }
      const double tn = std::sqrt(kernels::dot(rt, rt));
      if (tn < (1.0 - 1e-4 * alpha) * rn) {
        u = trial;
        r = std::move(rt);
        rn = tn;
        moved = true;
        break;
      }
    }
    if (!moved) {
      out.why = "Newton backtracking stalled";
      return out;
    }
    out.max_gap = std::max(out.max_gap, dom_diagnostics(J.phi, u).relative_gap);
  }
  out.residual = kernels::max_abs(r);
  if (out.residual > opt.tol) {
    out.why = "Newton did not converge";
    return out;
  }
  const double c = energy(J, u);
  const double d1 = kernels::max_abs((u - u1).values);
  if (u.sup_norm() <= 1e-4 || d1 <= 1e-4 || !(c > 0.0)) {
    out.why = "polished point is 0 or u1";
    return out;
  }
  out.ok = true;
  out.u = std::move(u);
  return out;
}

}  // namespace

GeometryReport verify_mp_geometry(const EnergyFunctional& J, const DiscreteFunction& u1, std::vector<double> r_grid,
                                  int samples, std::uint64_t seed) {
  GeometryReport rep;
  const double u1_norm = luxemburg_norm(J.phi, u1, true).value;
  if (r_grid.empty()) {
    const double base = std::min(u1_norm, 1.0);
    for (const double f : {0.02, 0.05, 0.1, 0.2, 0.35, 0.5, 0.75}) r_grid.push_back(f * base);
  }
  rep.r_grid = r_grid;

  std::seed_seq seq{seed, std::uint64_t{0x9e3779b97f4a7c15ULL}};
  std::mt19937_64 rng(seq);
  std::vector<DiscreteFunction> dirs;
  std::vector<double> norms;
  if (u1_norm > 0.0) {
    dirs.push_back(u1);
    norms.push_back(u1_norm);
  }
  for (int k = 0; static_cast<int>(dirs.size()) < samples; ++k) {
    auto v = sample_direction(J.mesh, rng, k % 3);
    const double nv = luxemburg_norm(J.phi, v, true).value;
    if (!(nv > 0.0)) continue;
    dirs.push_back(std::move(v));
    norms.push_back(nv);
  }

  double best_nonpositive = -std::numeric_limits<double>::infinity();
  for (const double r : r_grid) {
    double rho = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < dirs.size(); ++k) rho = std::min(rho, safe_energy(J, (r / norms[k]) * dirs[k]));
    rep.rho_by_r.push_back(rho);
    if (rho > 0.0 && !rep.holds) {
      rep.holds = true;
      rep.r = r;
      rep.rho = rho;
    }
    if (rho <= 0.0 && rho > best_nonpositive) best_nonpositive = rho;
  }
  if (!rep.holds) {
    rep.r = r_grid.front();
    rep.rho = best_nonpositive;
  }
  return rep;
}

MountainPassResult mountain_pass(const EnergyFunctional& J, const DiscreteFunction& u1,
                                 const MountainPassOptions& opt) {
  const double j1 = energy(J, u1);
  if (!(j1 < 0.0)) throw Error(ErrorKind::CollapsedPath, "mountain pass needs J(u1) < 0");
  const SparseMatrix K = stiffness(*J.mesh);
  MountainPassResult res;
  MountainPassState& st = res.state;
  // Enough nodes that the barrier of the straight segment is resolved.
  double theta_peak = 1.0, peak = -std::numeric_limits<double>::infinity();
  for (const double th : geometric_grid(1e-4, 1.0, 200)) {
    const double v = safe_energy(J, th * u1);
    if (v > peak) {
      peak = v;
      theta_peak = th;
    }
  }
  int points = std::max(opt.path_points, 3);
  points = std::max(points, std::min(opt.max_path_points, static_cast<int>(std::ceil(4.0 / theta_peak)) + 1));
  for (int k = 0; k < points; ++k) st.path.push_back((static_cast<double>(k) / (points - 1)) * u1);
  std::vector<double> mu(points, 0.0);
  std::string last_why = "no polish attempted";

  for (int round = 0; round <= opt.refinements; ++round) {
    int last_attempt = -10;
    for (int it = 0; it < opt.max_iter; ++it) {
      const double spacing = [&] {
        std::vector<double> d(u1.values.size());
        kernels::add_scaled(st.path[1].values, -1.0, st.path[0].values, d);
        return detail::metric_norm(K, d);
      }();
      for (int i = 1; i + 1 < points; ++i) {
        DiscreteFunction& v = st.path[i];
        const double Jv = energy(J, v);
        const auto r = residual(J, v);
        auto d = detail::descent_direction(J, v, r, K, mu[i], false);
        const double dn = detail::metric_norm(K, d);
        double alpha = dn > 0.5 * spacing ? 0.5 * spacing / dn : 1.0;
        const double slope = kernels::dot(r, d);
        DiscreteFunction trial(J.mesh, true);
        bool accepted = false;
        for (int k = 0; k < 50; ++k) {
          kernels::add_scaled(v.values, alpha, d, trial.values);
          if (safe_energy(J, trial) <= Jv + 1e-4 * alpha * slope) {
            accepted = true;
            break;
          }
          alpha *= 0.5;
        }
        if (accepted) v = std::move(trial);
        if (accepted && alpha >= 0.5)
          mu[i] *= 0.1;
        else
          mu[i] = std::max(mu[i] * 10.0, 1e-8);
      }
      st.path = reparametrize(st.path, K, points);
      st.level = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < points; ++i) {
        const double v = safe_energy(J, st.path[i]);
        if (v > st.level) {
          st.level = v;
          st.argmax_index = i;
        }
      }
      st.levels.push_back(st.level);
      ++st.iterations;
      const bool interior = st.argmax_index > 0 && st.argmax_index + 1 < points;
      if (!interior) {
        if (2 * points - 1 > opt.max_path_points) {
          throw Error(ErrorKind::CollapsedPath, "path maximum sits at an endpoint at the finest path");
        }
        break;
      }
      if (st.level < opt.rho - opt.level_tol) {
        std::ostringstream os;
        os << "path maximum " << st.level << " fell below rho " << opt.rho;
        throw Error(ErrorKind::CollapsedPath, os.str());
      }
      const std::size_t h = st.levels.size();
      const bool stable = h > 10 && std::fabs(st.levels[h - 1] - st.levels[h - 11]) <=
                                        1e-6 * std::max(1.0, std::fabs(st.level));
      const bool periodic = (it + 1) % 50 == 0;
      if ((stable && it - last_attempt >= 10) || periodic) {
        last_attempt = it;
        Polish p = polish(J, st.path, st.argmax_index, u1, opt);
        st.max_identity_gap = std::max(st.max_identity_gap, p.max_gap);
        if (p.ok) {
          res.c = energy(J, p.u);
          res.residual_norm = p.residual;
          st.path[st.argmax_index] = p.u;
          st.level = std::max(st.level, res.c);
          res.u2 = std::move(p.u);
          return res;
        }
        last_why = p.why;
      }
    }
    if (round == opt.refinements || 2 * points - 1 > opt.max_path_points) break;
    points = 2 * points - 1;
    st.path = reparametrize(st.path, K, points);
    mu.assign(points, 0.0);
  }
  throw Error(ErrorKind::MaxIterations, "mountain pass did not converge: " + last_why);
}

}  // namespace orlicz
