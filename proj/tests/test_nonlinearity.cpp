#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "orlicz/error.hpp"
#include "orlicz/nonlinearity.hpp"
#include "support.hpp"

using namespace orlicz;

namespace {

const Site kOrigin{};

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorKind::ConfigParse;
}

// Central difference of F in t.
double dF(const Rhs& r, const Site& s, double t, double h) { return (r.F(s, t + h) - r.F(s, t - h)) / (2 * h); }
double df_fd(const Rhs& r, const Site& s, double t, double h) { return (r.f(s, t + h) - r.f(s, t - h)) / (2 * h); }

std::vector<NonlinearityPtr> all_models() {
  return {model_f("pq", {{"p", 3.0}, {"q", 2.0}}), model_f("pq", {{"p", 4.5}, {"q", 1.5}}),
          model_f("pqlog", {{"p", 3.0}, {"q", 2.0}}), model_f("sublinear", {{"kappa", 0.2}, {"s", 2.5}}),
          model_f("constant", {{"c", 1.5}})};
}

}  // namespace

TEST(ModelF, PqExamples) {
  const auto f = model_f("pq", {{"p", 3.0}, {"q", 2.0}});
  EXPECT_EQ(f->f(kOrigin, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(f->f(kOrigin, 2.0), 2.0);
  EXPECT_NEAR(f->F(kOrigin, 2.0), 2.0 / 3.0, 1e-15);
  EXPECT_EQ(f->f(kOrigin, -5.0), 0.0);
  EXPECT_EQ(f->F(kOrigin, -5.0), 0.0);
  ASSERT_TRUE(f->growth.has_value());
  EXPECT_DOUBLE_EQ(f->growth->value(2.0), 8.0 / 3.0);
  EXPECT_EQ(f->name(), "pq");
}

TEST(ModelF, ParameterErrors) {
  EXPECT_EQ(kind_of([] { model_f("pq", {{"p", 2.0}, {"q", 3.0}}); }), ErrorKind::ParamOutOfRange);
  EXPECT_EQ(kind_of([] { model_f("pq", {{"p", 3.0}, {"q", 1.0}}); }), ErrorKind::ParamOutOfRange);
  EXPECT_EQ(kind_of([] { model_f("pq", {{"p", 3.0}, {"q", 3.0}}); }), ErrorKind::ParamOutOfRange);
  EXPECT_EQ(kind_of([] { model_f("pqlog", {{"p", 3.0}}); }), ErrorKind::ParamOutOfRange);
  EXPECT_EQ(kind_of([] { model_f("sublinear", {{"kappa", 0.2}, {"s", 3.5}}); }), ErrorKind::ParamOutOfRange);
  EXPECT_EQ(kind_of([] { model_f("cubic"); }), ErrorKind::UnknownModel);
}

TEST(ModelF, AntiderivativeAndDerivativeOracles) {
  for (const auto& f : all_models()) {
    EXPECT_EQ(f->F(kOrigin, 0.0), 0.0) << f->name();
    for (const double t : geometric_grid(1e-3, 50.0, 120)) {
      const double h = 1e-6 * t;
      const double scale = 1.0 + std::fabs(f->f(kOrigin, t));
      EXPECT_NEAR(dF(*f, kOrigin, t, h), f->f(kOrigin, t), 1e-6 * scale) << f->name() << " t=" << t;
      EXPECT_NEAR(f->df(kOrigin, t), df_fd(*f, kOrigin, t, h), 1e-5 * (1.0 + std::fabs(f->df(kOrigin, t))))
          << f->name() << " t=" << t;
    }
    // Negative arguments use t+ = 0; the constant model is linear on all of R.
    if (f->name() != "constant") {
      EXPECT_EQ(f->F(kOrigin, -2.0), 0.0) << f->name();
    }
  }
}

TEST(ModelF, PqlogClosedForm) {
  // f = 3 t^2 ln(1+t) + t^3/(1+t) - 2t for p = 3, q = 2.
  const auto f = model_f("pqlog", {{"p", 3.0}, {"q", 2.0}});
  for (double t : {0.1, 1.0, 4.0}) {
    EXPECT_NEAR(f->F(kOrigin, t), t * t * t * std::log1p(t) - t * t, 1e-13);
    EXPECT_NEAR(f->f(kOrigin, t), 3 * t * t * std::log1p(t) + t * t * t / (1 + t) - 2 * t, 1e-12);
  }
}

TEST(ModelF, CustomRhs) {
  const auto f = custom_f("sine", [](Point x, double t) { return std::sin(x.x) * t; },
                          [](Point x, double t) { return 0.5 * std::sin(x.x) * t * t; });
  const Site s{{1.0, 0.0}};
  EXPECT_DOUBLE_EQ(f->f(s, 2.0), 2.0 * std::sin(1.0));
  EXPECT_NEAR(f->df(s, 2.0), std::sin(1.0), 1e-7);
  EXPECT_EQ(f->name(), "sine");
}

TEST(Truncation, BranchExamples) {
  const auto mesh = make_mesh(1, {}, 8);
  const auto u1 = DiscreteFunction::interpolate(mesh, [](Point) { return 2.0; }, false);
  const auto g = truncate(model_f("pq", {{"p", 3.0}, {"q", 2.0}}), u1);
  const Site s{{0.37, 0.0}};
  EXPECT_EQ(g->f(s, -1.0), 0.0);
  EXPECT_EQ(g->F(s, -1.0), 0.0);
  EXPECT_EQ(g->f(s, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(g->f(s, 3.0), 2.0);
  EXPECT_NEAR(g->F(s, 3.0), 2.0 / 3.0 + 2.0, 1e-15);
  EXPECT_EQ(g->df(s, 3.0), 0.0);
  EXPECT_FALSE(g->negative_ceiling());
  // Quadrature-indexed sites read the precomputed ceiling.
  const Site q{mesh->quad[5].x, 5};
  EXPECT_DOUBLE_EQ(g->ceiling_at(q), 2.0);
}

TEST(Truncation, ContinuityAndDerivativeAcrossCeiling) {
  const auto mesh = make_mesh(2, {}, 6);
  std::mt19937_64 rng(4);
  auto u1 = testing_support::random_zero_trace(mesh, rng);
  for (double& v : u1.values) v = std::fabs(v) * 3.0;
  for (const auto& base : all_models()) {
    const auto g = truncate(base, u1);
    for (int qi = 0; qi < static_cast<int>(mesh->quad.size()); qi += 7) {
      const Site s{mesh->quad[qi].x, qi};
      const double c = g->ceiling_at(s);
      EXPECT_NEAR(c, u1.evaluate(s.x), 1e-12);
      double fmax = 0.0;
      for (int k = 0; k <= 200; ++k) fmax = std::max(fmax, std::fabs(base->f(s, c * k / 200.0)));
      for (double t : {-1.0, 0.3 * c, 0.9 * c, c, 1.1 * c, 2.0 * c + 1.0, 100.0}) {
        const double h = 1e-6 * (1.0 + std::fabs(t));
        if (std::fabs(t - c) > 2 * h && std::fabs(t) > 2 * h) {
          EXPECT_NEAR(dF(*g, s, t, h), g->f(s, t), 1e-5 * (1.0 + std::fabs(g->f(s, t)))) << base->name() << " t=" << t;
        }
        EXPECT_LE(std::fabs(g->f(s, t)), fmax * (1.0 + 1e-12) + 1e-12) << base->name();
      }
      // G is continuous at the ceiling with matching one-sided slopes.
      const double h = 1e-7 * (1.0 + c);
      EXPECT_NEAR(g->F(s, c + h), g->F(s, c - h), 1e-5 * (1.0 + std::fabs(g->F(s, c))));
      const double left = (g->F(s, c) - g->F(s, c - h)) / h;
      const double right = (g->F(s, c + h) - g->F(s, c)) / h;
      EXPECT_NEAR(left, right, 1e-4 * (1.0 + std::fabs(left))) << base->name();
    }
  }
}

TEST(Truncation, NegativeCeilingFlagged) {
  const auto mesh = make_mesh(1, {}, 4);
  DiscreteFunction u1(mesh);
  u1.values[2] = -0.5;
  const auto g = truncate(model_f("pq", {{"p", 3.0}, {"q", 2.0}}), u1);
  EXPECT_TRUE(g->negative_ceiling());
  const Site s{{0.5, 0.0}};
  EXPECT_EQ(g->f(s, -0.1), 0.0);
  EXPECT_EQ(g->F(s, 1.0), g->F(s, 0.0) + g->f(s, -0.5) * 1.0);
}

TEST(Hypotheses, ReferencePairHolds) {
  const auto rep = check_hypotheses(*model_f("pq", {{"p", 3.0}, {"q", 2.0}}), catalog("power", {{"p", 4.0}}),
                                    Profile::T1);
  EXPECT_TRUE(rep.holds);
  EXPECT_TRUE(rep.reasons.empty());
  EXPECT_NEAR(rep.f0.m_A, 3.0, 1e-9);
  EXPECT_NEAR(rep.f0.l, 4.0, 1e-8);
  EXPECT_NEAR(rep.f0.margin, 1.0, 1e-8);
  EXPECT_TRUE(rep.f1.holds);
  // F = t^3/3 - t^2/2 decreases exactly on (0, 1).
  EXPECT_NEAR(rep.f1.delta, 1.0, 0.03);
  EXPECT_TRUE(rep.f2.holds);
  EXPECT_GT(rep.f2.F_at_t1, 0.0);
  const double t1 = rep.f2.t1;
  EXPECT_NEAR(rep.f2.F_at_t1, t1 * t1 * t1 / 3 - t1 * t1 / 2, 1e-12);
  EXPECT_GT(t1, 1.5);  // F vanishes at 1.5 and is positive beyond
}

TEST(Hypotheses, QuadraticPhiFailsGrowthCondition) {
  const auto rep = check_hypotheses(*model_f("pq", {{"p", 3.0}, {"q", 2.0}}), catalog("power", {{"p", 2.0}}),
                                    Profile::T1);
  EXPECT_FALSE(rep.holds);
  EXPECT_FALSE(rep.f0.holds);
  ASSERT_FALSE(rep.reasons.empty());
  bool found = false;
  for (const auto& r : rep.reasons) found = found || r.find("m_A >= l") != std::string::npos;
  EXPECT_TRUE(found);
}

TEST(Hypotheses, ZeroRhsFailsF2) {
  const auto rep = check_hypotheses(*model_f("constant", {{"c", 0.0}}), catalog("power", {{"p", 4.0}}), Profile::T1);
  EXPECT_FALSE(rep.f2.holds);
  EXPECT_FALSE(rep.holds);
}

TEST(Hypotheses, SecondProfileModels) {
  const auto sub = model_f("sublinear", {{"kappa", 0.2}, {"s", 2.5}});
  for (const char* phi : {"exp", "loglinear"}) {
    const auto rep = check_hypotheses(*sub, catalog(phi), Profile::T2);
    EXPECT_TRUE(rep.holds) << phi << " " << (rep.reasons.empty() ? "" : rep.reasons.front());
    EXPECT_TRUE(rep.f3.holds);
    EXPECT_LT(rep.f3.alpha, 1.0);
    EXPECT_GT(rep.f3.alpha, 0.0);
    // Fitted bound holds on the scan grid.
    const NFunction Phi = catalog(phi);
    for (const double t : geometric_grid(1e-4, std::min(1e2, Phi.domain_hint()), 400))
      EXPECT_LE(std::fabs(sub->F(kOrigin, t)), rep.f3.C_est * std::pow(Phi.value(t), rep.f3.alpha) * (1 + 1e-9) + 1e-300)
          << phi << " t=" << t;
  }
}

TEST(Hypotheses, F3FailsForSuperlinearRhsOnQuadraticPhi) {
  // F ~ t^4 while Phi ~ t^2: no alpha < 1 exists.
  const auto rep = check_hypotheses(*model_f("pq", {{"p", 4.0}, {"q", 2.0}}), catalog("power", {{"p", 2.0}}),
                                    Profile::T2);
  EXPECT_FALSE(rep.f3.holds);
  EXPECT_FALSE(rep.holds);
}
