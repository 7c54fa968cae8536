#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "orlicz/error.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/nfunction.hpp"
#include "support.hpp"

using namespace orlicz;
using testing_support::random_zero_trace;

namespace {

NFunction quadratic() { return catalog("power", {{"p", 2.0}}); }
NFunction quartic() { return catalog("power", {{"p", 4.0}}); }

DiscreteFunction constant_one(const MeshPtr& m) {
  return DiscreteFunction::interpolate(m, [](Point) { return 1.0; }, false);
}

}  // namespace

TEST(Modular, ValuesAndScale) {
  const auto mesh = make_mesh(1, {}, 16);
  const auto one = constant_one(mesh);
  EXPECT_NEAR(modular(quadratic(), one, false), 0.5, 1e-15);
  EXPECT_NEAR(modular(quadratic(), one, false, 3.0), 4.5, 1e-14);
  const auto x = DiscreteFunction::interpolate(mesh, [](Point p) { return p.x; }, false);
  EXPECT_NEAR(modular(quartic(), x, true), 0.25, 1e-15);
  // int x^4/4 on (0,1) for the P1 interpolant is not exact; 3-point Gauss per element is
  // exact for the degree-4 polynomial on each piece.
  double oracle = 0.0;
  const double h = 1.0 / 16;
  for (int e = 0; e < 16; ++e) {
    const double a = e * h, b = a + h;
    oracle += (std::pow(b, 5) - std::pow(a, 5)) / 20.0;
  }
  EXPECT_NEAR(modular(quartic(), x, false), oracle, 1e-15);
}

TEST(Modular, YoungFnOverloadMatchesNFunction) {
  const auto mesh = make_mesh(2, {}, 6);
  std::mt19937_64 rng(3);
  const auto u = random_zero_trace(mesh, rng);
  const NFunction phi = catalog("genpower", {{"alpha", 1.5}});
  const YoungFn fn = [&](double t) { return phi.value(t); };
  EXPECT_DOUBLE_EQ(modular(fn, u, true), modular(phi, u, true));
  EXPECT_DOUBLE_EQ(modular(fn, u, false), modular(phi, u, false));
}

TEST(Luxemburg, ConstantFunctionExamples) {
  for (int dim : {1, 2}) {
    const auto mesh = make_mesh(dim, {}, 8);
    const auto one = constant_one(mesh);
    const auto n2 = luxemburg_norm(quadratic(), one, false);
    EXPECT_NEAR(n2.value, 1.0 / std::sqrt(2.0), 1e-12) << dim;
    EXPECT_LE(n2.lo, n2.value);
    EXPECT_EQ(n2.hi, n2.value);
    const auto n4 = luxemburg_norm(quartic(), one, false);
    EXPECT_NEAR(n4.value, std::pow(0.25, 0.25), 1e-12) << dim;
  }
}

TEST(Luxemburg, ZeroFunction) {
  const auto mesh = make_mesh(1, {}, 8);
  const DiscreteFunction zero(mesh);
  EXPECT_EQ(luxemburg_norm(quartic(), zero, false).value, 0.0);
  EXPECT_EQ(luxemburg_norm(quartic(), zero, true).value, 0.0);
}

TEST(Luxemburg, ExponentialModelSolvesModularEquation) {
  // Phi(t) = (e^{t^2} - 1)/2 and u = 1: (e^{1/L^2} - 1)/2 = 1.
  const auto mesh = make_mesh(1, {}, 4);
  const auto n = luxemburg_norm(catalog("exp"), constant_one(mesh), false);
  EXPECT_NEAR(n.value, 1.0 / std::sqrt(std::log(3.0)), 1e-12);
}

TEST(Luxemburg, UnitBallAndHomogeneity) {
  std::mt19937_64 rng(11);
  const std::vector<NFunction> models{quadratic(), quartic(), catalog("plog", {{"p", 2.5}}),
                                      catalog("exp"), catalog("loglinear")};
  for (int dim : {1, 2}) {
    const auto mesh = make_mesh(dim, {}, dim == 1 ? 32 : 8);
    for (const auto& phi : models) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto u = random_zero_trace(mesh, rng, 0.5 + trial);
        for (bool grad : {false, true}) {
          const auto n = luxemburg_norm(phi, u, grad);
          ASSERT_GT(n.value, 0.0);
          EXPECT_NEAR(modular(phi, u, grad, 1.0 / n.value), 1.0, 1e-8) << phi.name() << " dim " << dim;
          EXPECT_NEAR(n.modular_at_value, 1.0, 1e-8);
          for (double c : {-3.0, 0.25, 7.0}) {
            const auto nc = luxemburg_norm(phi, c * u, grad);
            EXPECT_NEAR(nc.value, std::fabs(c) * n.value, 1e-8 * std::fabs(c) * n.value) << phi.name();
          }
        }
      }
    }
  }
}

TEST(Luxemburg, ModularNormBound) {
  // The quartic gradient modular dominates the 4th power of the norm once the norm is >= 2.
  const NFunction phi = quartic();
  const auto mesh = make_mesh(1, {}, 32);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> target(2.0, 6.0);
  for (int k = 0; k < 100; ++k) {
    auto u = random_zero_trace(mesh, rng);
    u = (target(rng) / luxemburg_norm(phi, u, true).value) * u;
    const double norm = luxemburg_norm(phi, u, true).value;
    ASSERT_GE(norm, 2.0 - 1e-9);
    EXPECT_GE(modular(phi, u, true), std::pow(norm, 4.0) - 1e-8 * std::pow(norm, 4.0)) << k;
  }
}

TEST(Holder, Examples) {
  const auto mesh = make_mesh(1, {}, 16);
  const NFunction phi = quadratic();
  const DiscreteFunction zero(mesh, false);
  const auto v = DiscreteFunction::interpolate(mesh, [](Point p) { return 1.0 - p.x; }, false);
  const auto z = verify_holder(phi, zero, v);
  EXPECT_EQ(z.lhs, 0.0);
  EXPECT_EQ(z.rhs, 0.0);
  EXPECT_TRUE(z.holds);

  const auto one = constant_one(mesh);
  const auto eq = verify_holder(phi, one, one);
  EXPECT_NEAR(eq.lhs, 1.0, 1e-14);
  EXPECT_NEAR(eq.rhs, 1.0, 1e-10);
  EXPECT_TRUE(eq.holds);

  const auto x = DiscreteFunction::interpolate(mesh, [](Point p) { return p.x; }, false);
  const auto xv = verify_holder(phi, x, v);
  EXPECT_NEAR(xv.lhs, 1.0 / 6.0, 1e-14);
  EXPECT_GE(xv.rhs, 1.0 / 6.0);
  EXPECT_TRUE(xv.holds);
}

TEST(Holder, RandomPairsAcrossModels) {
  const auto mesh = make_mesh(2, {}, 6);
  std::mt19937_64 rng(17);
  for (const char* name : {"power", "plog", "exp", "loglinear"}) {
    ParamMap params;
    if (std::string(name) == "power") params = {{"p", 3.0}};
    if (std::string(name) == "plog") params = {{"p", 2.0}};
    const NFunction phi = catalog(name, params);
    for (int k = 0; k < 10; ++k) {
      const auto u = random_zero_trace(mesh, rng);
      const auto v = random_zero_trace(mesh, rng, 0.3);
      EXPECT_TRUE(verify_holder(phi, u, v).holds) << name;
    }
  }
}

TEST(Poincare, Examples) {
  const auto mesh = make_mesh(1, {}, 256);
  const DiscreteFunction zero(mesh);
  const auto z = verify_modular_poincare(quadratic(), zero, 1.0);
  EXPECT_EQ(z.lhs, 0.0);
  EXPECT_EQ(z.rhs, 0.0);
  EXPECT_TRUE(z.holds);

  const auto u = DiscreteFunction::interpolate(mesh, [](Point p) { return p.x * (1.0 - p.x); });
  const auto q = verify_modular_poincare(quadratic(), u, 1.0);
  EXPECT_NEAR(q.lhs, 1.0 / 60.0, 1e-5);
  EXPECT_NEAR(q.rhs, 1.0 / 6.0, 1e-5);
  EXPECT_TRUE(q.holds);
  EXPECT_TRUE(verify_modular_poincare(quartic(), u, 1.0).holds);
}

TEST(Poincare, NonzeroBoundaryRejected) {
  const auto mesh = make_mesh(1, {}, 8);
  try {
    verify_modular_poincare(quadratic(), constant_one(mesh), 1.0);
    FAIL() << "expected NonzeroBoundary";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonzeroBoundary);
  }
}

TEST(Poincare, OverflowingRightSideHolds) {
  const auto mesh = make_mesh(1, {}, 16);
  const auto u = DiscreteFunction::interpolate(mesh, [](Point p) { return 2.0 * std::sin(8.0 * std::numbers::pi * p.x); });
  const auto r = verify_modular_poincare(catalog("exp"), u, 1.0);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(std::isinf(r.rhs));
}

TEST(Poincare, RandomZeroTraceFunctions) {
  std::mt19937_64 rng(23);
  for (int dim : {1, 2}) {
    const auto mesh = make_mesh(dim, {0.0, 2.0, 0.0, 1.0}, dim == 1 ? 64 : 10);
    for (const auto& phi : {quadratic(), quartic(), catalog("loglinear")}) {
      for (int k = 0; k < 100; ++k) {
        const auto u = random_zero_trace(mesh, rng, 0.2 + 0.05 * k);
        EXPECT_TRUE(verify_modular_poincare(phi, u, mesh->diam).holds) << phi.name() << " k=" << k;
        // Norm form: ||u|| <= 2 d ||grad u||.
        const double nu = luxemburg_norm(phi, u, false).value;
        const double ng = luxemburg_norm(phi, u, true).value;
        EXPECT_LE(nu, 2.0 * mesh->diam * ng * (1.0 + 1e-8)) << phi.name();
      }
    }
  }
}

TEST(Young, GridCheck) {
  for (const auto& m : testing_support::catalog_models()) {
    const NFunction phi = catalog(m.name, m.params);
    const auto ts = geometric_grid(1e-3, std::min(phi.domain_hint(), 30.0), 40);
    const auto ss = geometric_grid(1e-3, std::min(Complementary(phi).s_max(), 1e3), 40);
    const auto r = verify_young(phi, ts, ss);
    EXPECT_TRUE(r.holds) << m.name;
  }
}
