#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "blaschke/errors.hpp"
#include "blaschke/family.hpp"
#include "support.hpp"

using namespace blaschke;
using testing_support::Gen;

namespace {

Complex ev(Complex a, Complex z) { return eval(BlaschkeParam(a), z).value(); }

}  // namespace

TEST(Eval, FixedPointsAndSpecialValues) {
  EXPECT_EQ(ev({3.0, 1.0}, 0.0), Complex{});
  EXPECT_NEAR(std::abs(ev(2.0, 1.0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ev(4.0, 1.0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ev({1.2, -0.7}, {1.2, -0.7})), 0.0, 1e-15);

  const BlaschkeParam p(Complex{2.0, 0.5});
  EXPECT_TRUE(eval(p, ExtComplex::infinity()).is_infinite());
  EXPECT_TRUE(eval(p, 1.0 / std::conj(p.a())).is_infinite());
}

TEST(Eval, MatchesIndependentFormula) {
  // z = 2 is the pole 1/conj(a) for a = 0.5; just past it the value is finite.
  EXPECT_TRUE(eval(BlaschkeParam(Complex{0.5, 0.0}), Complex{2.0, 0.0}).is_infinite());
  const Complex w = ev(0.5, 3.0);
  EXPECT_GT(std::abs(w), 1.0);
  EXPECT_NEAR(std::abs(w - testing_support::blaschke_formula(0.5, 3.0)), 0.0, 1e-13 * std::abs(w));

  Gen g(1);
  for (int i = 0; i < 1000; ++i) {
    const Complex a = g.parameter(0.0, 8.0);
    const Complex z = g.box(3.0);
    if (std::abs(1.0 - std::conj(a) * z) < 1e-3) continue;
    const Complex ref = testing_support::blaschke_formula(a, z);
    EXPECT_LE(std::abs(ev(a, z) - ref), 1e-12 * std::max(1.0, std::abs(ref)));
  }
}

TEST(Eval, DegenerateParameterCollapses) {
  const Complex a = std::polar(1.0, 0.3);
  const BlaschkeParam p(a);
  ASSERT_TRUE(p.degenerate());
  const Complex z{0.4, 0.2};
  EXPECT_NEAR(std::abs(eval(p, z).value() + a * z * z * z), 0.0, 1e-15);
  EXPECT_THROW(critical_points(p), DomainError);
}

TEST(Eval, RejectsNan) {
  EXPECT_THROW(eval(BlaschkeParam(Complex{2.0, 0.0}), Complex{std::nan(""), 0.0}), DomainError);
  EXPECT_THROW(BlaschkeParam(Complex{INFINITY, 0.0}), DomainError);
  EXPECT_THROW(BlaschkeParam(Complex{2.0, 0.0}, 1.0), DomainError);
}

TEST(Eval, CircleInvariance) {
  Gen g(2);
  for (int i = 0; i < 10000; ++i) {
    const BlaschkeParam p(g.parameter(0.0, 10.0));
    const Complex z = std::polar(1.0, g.uniform(0.0, 2 * std::numbers::pi));
    const ExtComplex w = eval(p, z);
    ASSERT_TRUE(w.is_finite());
    EXPECT_LT(std::abs(std::abs(w.value()) - 1.0), 1e-12);
  }
}

TEST(Eval, ReflectionEquivariance) {
  Gen g(3);
  for (int i = 0; i < 1000; ++i) {
    const BlaschkeParam p(g.parameter(0.0, 10.0));
    const Complex z = g.polar(0.1, 5.0);
    if (std::abs(1.0 - p.a_conj() * z) < 1e-3 || std::abs(z - p.a()) < 1e-3) continue;
    const Complex lhs = eval(p, reflect(z)).value();
    const Complex rhs = reflect(eval(p, z).value());
    EXPECT_LE(std::abs(lhs - rhs), 1e-10 * std::abs(rhs));
  }
}

TEST(Eval, RotationAndConjugationConjugacies) {
  const Complex xi = cube_root_of_unity();
  Gen g(4);
  for (int i = 0; i < 1000; ++i) {
    const Complex a = g.parameter(0.0, 10.0);
    const Complex z = g.box(2.0);
    if (std::abs(1.0 - std::conj(a) * z) < 1e-3) continue;
    const Complex base = ev(a, z);
    const double tol = 1e-10 * std::max(1.0, std::abs(base));
    // tau(z) = conj(xi) z
    EXPECT_LE(std::abs(std::conj(xi) * ev(xi * a, z) - ev(a, std::conj(xi) * z)), tol);
    EXPECT_LE(std::abs(ev(std::conj(a), std::conj(z)) - std::conj(base)), tol);
  }
}

TEST(Eval, RotationParameterFoldsIntoA) {
  Gen g(5);
  for (int i = 0; i < 200; ++i) {
    const Complex a = g.parameter(0.0, 6.0);
    const double t = g.uniform(0.0, 1.0);
    const Complex mu = std::polar(1.0, 2 * std::numbers::pi * t / 3);
    const BlaschkeParam p(a, t);
    EXPECT_NEAR(std::abs(p.a() - mu * a), 0.0, 1e-14 * std::abs(a) + 1e-300);
    const Complex z = g.box(1.5);
    if (std::abs(1.0 - std::conj(a) * z) < 1e-3) continue;
    const Complex rotated = eval_rotated(a, t, z);
    const Complex via_p = std::conj(mu) * eval(p, mu * z).value();
    EXPECT_LE(std::abs(rotated - via_p), 1e-10 * std::max(1.0, std::abs(rotated)));
  }
}

TEST(Eval, LargeParameterLimit) {
  Gen g(6);
  const double s = 0.37;
  const Complex a = std::polar(1e6, 2 * std::numbers::pi * s);
  const Complex rot = std::polar(1.0, 4 * std::numbers::pi * s);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Complex z = g.polar(0.5, 2.0);
    worst = std::max(worst, std::abs(ev(a, z) - rot * z * z));
  }
  EXPECT_LT(worst, 1e-4);
}

TEST(Eval, EscapeBound) {
  Gen g(7);
  for (int i = 0; i < 1000; ++i) {
    const Complex a = g.parameter(0.0, 20.0);
    const double r = 2.0 * (std::abs(a) + 1.0);
    const Complex z = std::polar(r, g.uniform(0.0, 2 * std::numbers::pi));
    EXPECT_GT(std::abs(ev(a, z)), 2.0 * r);
  }
}

TEST(Derivative, ExamplesAndPole) {
  EXPECT_EQ(derivative(BlaschkeParam(Complex{3.0, 0.0}), 0.0), Complex{});
  EXPECT_LT(std::abs(derivative(BlaschkeParam(Complex{2.0, 0.0}), 1.0)), 1e-15);
  const BlaschkeParam p(Complex{2.0, 1.0});
  EXPECT_THROW(derivative(p, 1.0 / p.a_conj()), DomainError);
}

TEST(Derivative, FiniteDifferenceOracle) {
  const BlaschkeParam p4(Complex{4.0, 0.0});
  const Complex z{0.7, 0.1};
  const double h = 1e-7;
  const Complex fd = (ev(4.0, z + h) - ev(4.0, z - h)) / (2 * h);
  EXPECT_LE(std::abs(fd - derivative(p4, z)), 1e-6 * std::abs(derivative(p4, z)));

  Gen g(8);
  for (int i = 0; i < 1000; ++i) {
    const Complex a = g.parameter(0.0, 8.0);
    const Complex w = g.box(2.0);
    if (std::abs(1.0 - std::conj(a) * w) < 1e-2) continue;
    Complex dz, dzbar;
    testing_support::wirtinger([&](Complex x) { return testing_support::blaschke_formula(a, x); }, w, 1e-5, dz,
                               dzbar);
    const Complex d = derivative(BlaschkeParam(a), w);
    EXPECT_LE(std::abs(dz - d), 1e-6 * std::max(1.0, std::abs(d)));
    EXPECT_LE(std::abs(dzbar), 1e-6 * std::max(1.0, std::abs(d)));
  }
}

TEST(CriticalPoints, Examples) {
  const CriticalData c2 = critical_points(BlaschkeParam(Complex{2.0, 0.0}));
  EXPECT_NEAR(std::abs(c2.c_plus - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(c2.c_minus - 1.0), 0.0, 1e-12);

  const CriticalData c4 = critical_points(BlaschkeParam(Complex{4.0, 0.0}));
  EXPECT_NEAR(c4.c_plus.real(), (3 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_NEAR(c4.c_minus.real(), (3 - std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_EQ(c4.zero, Complex{4.0});
  EXPECT_NEAR(std::abs(c4.pole - 0.25), 0.0, 1e-16);

  const CriticalData c15 = critical_points(BlaschkeParam(Complex{1.5, 0.0}));
  EXPECT_NEAR(std::abs(c15.c_plus), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(c15.c_minus), 1.0, 1e-12);
  EXPECT_GT(c15.c_plus.imag(), 0.0);
}

TEST(CriticalPoints, InvariantsAndRootOracle) {
  Gen g(9);
  for (int i = 0; i < 2000; ++i) {
    const Complex a = g.parameter(0.05, 12.0);
    const double r = std::abs(a);
    const CriticalData c = critical_points(BlaschkeParam(a));

    const Complex sum = 2.0 * a * (2.0 + r * r) / (3.0 * r * r);
    EXPECT_LE(std::abs(c.c_plus + c.c_minus - sum), 1e-12 * std::max(1.0, std::abs(sum)));
    if (r > 2.0 || r < 1.0) {
      EXPECT_NEAR(std::abs(c.c_plus) * std::abs(c.c_minus), 1.0, 1e-12);
      EXPECT_GE(std::abs(c.c_plus), 1.0 - 1e-12);
      EXPECT_LT(std::abs(std::arg(c.c_plus / a)), 1e-9);
      EXPECT_LT(std::abs(std::arg(c.c_minus / a)), 1e-9);
    } else {
      EXPECT_NEAR(std::abs(c.c_plus), 1.0, 1e-12);
      EXPECT_NEAR(std::abs(c.c_minus), 1.0, 1e-12);
    }

    // Nonzero roots of the derivative numerator -3 conj(a) z^2 + (4 + 2|a|^2) z - 3a.
    const auto [r0, r1] = testing_support::weierstrass_quadratic(-3.0 * std::conj(a), Complex{4.0 + 2 * r * r}, -3.0 * a);
    for (Complex cp : {c.c_plus, c.c_minus}) {
      const double d = std::min(std::abs(cp - r0), std::abs(cp - r1));
      EXPECT_LT(d, 1e-10 * std::max(1.0, std::abs(cp)));
      EXPECT_LT(std::abs(derivative(BlaschkeParam(a), cp)), 1e-9 * std::max(1.0, std::pow(std::abs(cp), 4)));
    }
  }
}

TEST(Reflect, Examples) {
  EXPECT_TRUE(reflect(ExtComplex(Complex{})).is_infinite());
  EXPECT_EQ(reflect(ExtComplex::infinity()).value(), Complex{});
  const Complex u = std::polar(1.0, 0.9);
  EXPECT_NEAR(std::abs(reflect(u) - u), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(reflect(Complex{2.0}) - 0.5), 0.0, 1e-16);
  Gen g(10);
  for (int i = 0; i < 100; ++i) {
    const Complex z = g.polar(0.01, 100.0);
    EXPECT_NEAR(std::abs(reflect(reflect(z)) - z), 0.0, 1e-14 * std::abs(z));
  }
}
