// Runs the eight acceptance criteria and prints one PASS/FAIL line each.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orlicz/energy.hpp"
#include "orlicz/error.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/solver.hpp"
#include "support.hpp"

using namespace orlicz;
using testing_support::catalog_models;
using testing_support::random_zero_trace;
using testing_support::rel_err;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

NFunction quadratic() { return catalog("power", {{"p", 2.0}}); }
NFunction quartic() { return catalog("power", {{"p", 4.0}}); }

double sup(const std::vector<double>& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::fabs(v));
  return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// int f(x, u) w with the mesh Gauss rule, independent of the assembly code.
double load_pairing(const Rhs& f, const DiscreteFunction& u, const DiscreteFunction& w) {
  const auto& mesh = *u.mesh;
  double s = 0.0;
  for (std::size_t q = 0; q < mesh.quad.size(); ++q) {
    const auto& qp = mesh.quad[q];
    const auto& el = mesh.elements[qp.element];
    double uq = 0.0, wq = 0.0;
    for (int a = 0; a < el.count; ++a) {
      uq += qp.bary[a] * u.values[el.nodes[a]];
      wq += qp.bary[a] * w.values[el.nodes[a]];
    }
    s += qp.weight * f.f(Site{qp.x, static_cast<int>(q)}, uq) * wq;
  }
  return s;
}

// Phi^{-1}(1) by plain bisection on the value.
double inverse_at_one(const NFunction& phi) {
  double lo = 0.0, hi = 1.0;
  while (phi.value(hi) < 1.0) hi *= 2.0;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    (phi.value(mid) < 1.0 ? lo : hi) = mid;
  }
  return hi;
}

// Shared between criteria 4 and 8.
struct ReferenceRun {
  MeshPtr mesh;
  NonlinearityPtr f;
  SolverReport report;
  bool ok = false;
};
ReferenceRun reference;

void algebra(Verdict& v) {
  for (const auto& m : catalog_models()) {
    const NFunction phi = catalog(m.name, m.params);
    const Complementary tilde(phi);
    const auto grid = default_grid(phi);
    double worst = 0.0;
    std::vector<double> ss;
    for (double t : grid) {
      const double s = phi.flux(t);
      if (!(s < tilde.s_max())) continue;
      ss.push_back(s);
      const double lhs = phi.density(t) * t * t;
      worst = std::max(worst, std::fabs(lhs - phi.value(t) - tilde.value(s)) / lhs);
    }
    v.require(worst < 1e-8, m.name + " conjugate identity gap " + std::to_string(worst));
    std::vector<double> ts, sub;
    for (std::size_t i = 0; i < grid.size(); i += 20) ts.push_back(grid[i]);
    for (std::size_t i = 0; i < ss.size(); i += 20) sub.push_back(ss[i]);
    v.require(verify_young(phi, ts, sub).holds, m.name + " Young inequality");
    v.require(check_delta2(phi, grid).satisfied == m.delta2, m.name + " Delta2 classification");
  }
  for (double p : {4.0, 1.5, 3.0}) {
    const NFunction phi = catalog("power", {{"p", p}});
    const Complementary tilde(phi);
    const double q = p / (p - 1.0);
    double worst = 0.0;
    for (double s : geometric_grid(1e-4, 1e4, 200)) worst = std::max(worst, rel_err(tilde.value(s), std::pow(s, q) / q));
    v.require(worst < 1e-8, "power conjugate p=" + std::to_string(p));
    const auto ix = indices(phi, 1);
    v.require(std::fabs(ix.l - p) < 1e-8 && std::fabs(ix.m - p) < 1e-8, "power indices p=" + std::to_string(p));
  }
}

void modular_norm(Verdict& v) {
  const auto mesh = make_mesh(1, {}, 64);
  const auto one = DiscreteFunction::interpolate(mesh, [](Point) { return 1.0; }, false);
  v.require(std::fabs(luxemburg_norm(quadratic(), one, false).value - 1.0 / std::sqrt(2.0)) < 1e-6, "norm of 1, t^2/2");
  for (const auto& m : catalog_models()) {
    const NFunction phi = catalog(m.name, m.params);
    const double expect = 1.0 / inverse_at_one(phi);
    v.require(std::fabs(luxemburg_norm(phi, one, false).value - expect) < 1e-6 * std::max(1.0, expect),
              "norm of 1, " + m.name);
  }
  std::mt19937_64 rng(2024);
  for (const auto& m : catalog_models()) {
    const NFunction phi = catalog(m.name, m.params);
    for (int k = 0; k < 10; ++k) {
      const auto u = random_zero_trace(mesh, rng, 0.3 + k);
      for (bool grad : {false, true}) {
        const double n = luxemburg_norm(phi, u, grad).value;
        v.require(std::fabs(modular(phi, u, grad, 1.0 / n) - 1.0) < 1e-6, "modular at unit sphere, " + m.name);
      }
    }
  }
  for (const auto& phi : {quadratic(), quartic(), catalog("exp"), catalog("loglinear")}) {
    for (int k = 0; k < 100; ++k) {
      const auto u = random_zero_trace(mesh, rng, 0.1 + 0.03 * k);
      v.require(verify_modular_poincare(phi, u, mesh->diam).holds, "Poincare, " + phi.name());
    }
  }
  const NFunction q4 = quartic();
  std::uniform_real_distribution<double> target(2.0, 8.0);
  for (int k = 0; k < 100; ++k) {
    auto u = random_zero_trace(mesh, rng);
    u = (target(rng) / luxemburg_norm(q4, u, true).value) * u;
    const double n = luxemburg_norm(q4, u, true).value;
    v.require(n >= 2.0 - 1e-9, "sample norm below 2");
    v.require(modular(q4, u, true) >= std::pow(n, 4.0) * (1.0 - 1e-9), "modular >= norm^l");
  }
}

void discretization(Verdict& v) {
  std::mt19937_64 rng(31);
  const std::vector<double> hs{1e-3, 3e-4, 1e-4, 3e-5, 1e-5, 3e-6, 1e-6};
  const auto pq = model_f("pq", {{"p", 3.0}, {"q", 2.0}});
  double lo = 10, hi = -10;
  for (const auto& phi : {quadratic(), quartic(), catalog("exp")}) {
    const auto mesh = make_mesh(1, {}, 16);
    const auto E = make_energy(phi, pq, 2.0, mesh);
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = random_zero_trace(mesh, rng, 0.3);
      const auto w = random_zero_trace(mesh, rng, 0.3);
      const double base = energy(E, u);
      const double exact = dot(residual(E, u), w.values);
      std::vector<double> errs;
      for (double h : hs) errs.push_back(std::fabs((energy(E, u + h * w) - base) / h - exact));
      const double slope = loglog_slope(hs, errs);
      lo = std::min(lo, slope);
      hi = std::max(hi, slope);
      v.require(std::fabs(slope - 1.0) <= 0.1, phi.name() + " slope " + std::to_string(slope));
    }
  }
  v.note << "slopes in [" << lo << ", " << hi << "]; ";
  const auto mesh = make_mesh(1, {}, 64);
  const auto unit = model_f("constant", {{"c", 1.0}});
  for (double lambda : {1.0, 3.0}) {
    const auto E = make_energy(quadratic(), unit, lambda, mesh);
    DescentOptions opt;
    opt.random_starts = 0;
    const auto res = minimize_I(E, DiscreteFunction(mesh), opt);
    double err = 0.0;
    for (int i = 0; i < mesh->node_count(); ++i) {
      const double x = mesh->nodes[i].x;
      err = std::max(err, std::fabs(res.u.values[i] - lambda * x * (1 - x) / 2));
    }
    v.require(err < 1e-13, "Poisson nodal error " + std::to_string(err));
  }
}

void pipeline(Verdict& v) {
  reference.mesh = make_mesh(1, {}, 64);
  reference.f = model_f("pq", {{"p", 3.0}, {"q", 2.0}});
  SolverOptions opt;
  opt.seed = 7;
  const auto pilot = solve_two(quartic(), reference.f, reference.mesh, 1.0, Profile::T1, opt);
  const double lambda = 2.0 * pilot.lambda_star;
  const auto& rep = reference.report = solve_two(quartic(), reference.f, reference.mesh, lambda, Profile::T1, opt);
  v.require(rep.outcome == Outcome::Success, "outcome " + std::string(to_string(rep.outcome)) + " " + rep.message);
  if (!rep.u2) return;
  reference.ok = true;
  const auto& u2 = *rep.u2;
  v.require(rep.I_u1 < -1e-6, "I(u1) < -1e-6");
  v.require(rep.c > 1e-6, "c > 1e-6");
  const auto J = make_energy(quartic(), truncate(reference.f, rep.u1), lambda, reference.mesh);
  v.require(std::fabs(rep.c - energy(J, u2)) < 1e-6, "|c - I(u2)|");
  bool ordered = true;
  for (int i = 0; i < reference.mesh->node_count(); ++i) ordered = ordered && u2.values[i] <= rep.u1.values[i] + 1e-8;
  v.require(ordered, "u2 <= u1");
  const double r1 = sup(residual(quartic(), *reference.f, lambda, rep.u1));
  const double r2 = sup(residual(quartic(), *reference.f, lambda, u2));
  v.require(r1 < 1e-6 && r2 < 1e-6, "residuals");
  v.require((rep.u1 - u2).sup_norm() > 1e-4, "distinct solutions");
  v.note << "lambda*=" << pilot.lambda_star << " I(u1)=" << rep.I_u1 << " c=" << rep.c << " res=" << r1 << "," << r2
         << "; ";

  const auto fine = solve_two(quartic(), reference.f, make_mesh(1, {}, 128), lambda, Profile::T1, opt);
  v.require(fine.outcome == Outcome::Success, "n=128 outcome " + fine.message);
  const double dI = rel_err(fine.I_u1, rep.I_u1), dc = rel_err(fine.c, rep.c);
  v.require(dI < 0.05 && dc < 0.05, "mesh change");
  v.note << "n=128 changes " << dI << ", " << dc << "; ";
}

void threshold(Verdict& v) {
  const auto mesh = make_mesh(1, {}, 64);
  const auto f = model_f("pq", {{"p", 3.0}, {"q", 2.0}});
  SolverOptions opt;
  opt.seed = 7;
  const auto pilot = solve_two(quartic(), f, mesh, 1.0, Profile::T1, opt);
  const double ls = pilot.lambda_star;
  const auto below = solve_two(quartic(), f, mesh, 0.5 * ls, Profile::T1, opt);
  v.require(below.outcome == Outcome::LambdaTooSmall || below.I_u1 >= -opt.tol, "below threshold minimizer");
  v.require(!below.u2.has_value(), "no second solution claim below threshold");
  // Energies from the assembled functional at the witness.
  const auto& u0 = pilot.u0;
  std::vector<double> I;
  for (double k : {0.5, 1.0, 2.0}) I.push_back(energy(make_energy(quartic(), f, k * ls, mesh), u0));
  const double Q = gradient_modular(quartic(), u0);
  const double slope_a = (I[1] - I[0]) / (0.5 * ls), slope_b = (I[2] - I[1]) / ls;
  v.require(rel_err(slope_a, slope_b) < 1e-8, "affine in lambda");
  v.require(std::fabs(I[1]) < 1e-8 * Q, "root at threshold");
  v.note << "I(lambda*)/Q=" << I[1] / Q << "; ";
}

void nonreflexive(Verdict& v) {
  const auto f = model_f("sublinear", {{"kappa", 0.2}, {"s", 2.5}});
  const auto mesh = make_mesh(1, {}, 64);
  for (const char* name : {"exp", "loglinear"}) {
    const NFunction phi = catalog(name);
    SolverOptions opt;
    opt.seed = 3;
    opt.hypothesis.dim = 1;
    try {
      const auto pilot = solve_two(phi, f, mesh, 1.0, Profile::T2, opt);
      const auto rep = pilot.outcome == Outcome::LambdaTooSmall
                           ? solve_two(phi, f, mesh, 2.0 * pilot.lambda_star, Profile::T2, opt)
                           : pilot;
      v.require(rep.outcome == Outcome::Success, std::string(name) + " outcome " + rep.message);
      v.require(rep.max_identity_gap < 1e-8, std::string(name) + " identity gap");
      v.note << name << ": c=" << rep.c << " gap=" << rep.max_identity_gap << "; ";
    } catch (const Error& e) {
      v.require(e.kind() == ErrorKind::OverflowDomain, std::string(name) + " " + e.what());
      v.note << name << ": " << e.what() << "; ";
    }
  }
}

void mountain_pass_oracle(Verdict& v) {
  // One interior node: J(s phi_mid) = 2 s^2 - s^4 / 5 for Phi = t^2/2, F = t^4, lambda = 1.
  const auto mesh = make_mesh(1, {}, 2);
  const auto rhs = custom_f("quartic", [](Point, double t) { return 4 * t * t * t; },
                            [](Point, double t) { return t * t * t * t; });
  const auto J = make_energy(quadratic(), rhs, 1.0, mesh);
  auto at = [&](double s) {
    DiscreteFunction u(mesh);
    u.values[1] = s;
    return u;
  };
  const double end = 4.0;
  double best = -1e300;
  const int samples = 400000;
  for (int k = 0; k <= samples; ++k) best = std::max(best, energy(J, at(end * k / samples)));
  const auto mp = mountain_pass(J, at(end));
  v.require(std::fabs(mp.c - best) < 1e-4, "level vs grid search");
  v.note << "c=" << mp.c << " grid=" << best << "; ";
}

void critical_point(Verdict& v) {
  v.require(reference.ok, "reference run unavailable");
  if (!reference.ok) return;
  const auto& u1 = reference.report.u1;
  const double lambda = reference.report.lambda;
  const double Qu1 = gradient_modular(quartic(), u1);
  std::mt19937_64 rng(88);
  double margin = 1e300;
  for (int k = 0; k < 100; ++k) {
    const auto w = u1 + random_zero_trace(reference.mesh, rng, 0.05 * (1 + k % 10));
    const double lhs = gradient_modular(quartic(), w) - Qu1;
    const double rhs = lambda * load_pairing(*reference.f, u1, w - u1);
    margin = std::min(margin, lhs - rhs);
    v.require(lhs >= rhs - 1e-6, "sample " + std::to_string(k));
  }
  v.note << "min margin " << margin << "; ";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget;  // seconds, 0 for none
    std::function<void(Verdict&)> run;
  };
  const std::vector<Criterion> criteria{
      {"N-function algebra", 1.0, algebra},
      {"modular and norm", 1.0, modular_norm},
      {"discretization", 5.0, discretization},
      {"two-solution pipeline", 60.0, pipeline},
      {"threshold behavior", 0.0, threshold},
      {"nonreflexive models", 0.0, nonreflexive},
      {"mountain-pass oracle", 0.0, mountain_pass_oracle},
      {"critical-point inequality", 0.0, critical_point},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].budget > 0) v.require(secs < criteria[i].budget, "time budget");
    failures += !v.pass;
    std::printf("%s %zu %s (%.2fs) %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, secs, v.note.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
