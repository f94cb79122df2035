#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "blaschke/atlas.hpp"
#include "blaschke/errors.hpp"
#include "blaschke/multiplier.hpp"

using namespace blaschke;

TEST(MultiplierAt, Examples) {
  EXPECT_LT(std::abs(multiplier_at(2.0)), 1e-10);

  const ParamClassRecord r = classify_parameter(5.25);
  ASSERT_TRUE(r.cycle_plus && r.cycle_minus);
  EXPECT_LT(std::abs(r.cycle_minus->multiplier - std::conj(r.cycle_plus->multiplier)), 1e-9);

  // Real parameters commute with conjugation, so self-symmetric cycles there
  // have real multipliers.
  const Complex m = multiplier_at(2.5);
  EXPECT_LT(std::abs(m.imag()), 1e-9);
  EXPECT_LT(std::abs(m), 1.0);
}

TEST(MultiplierAt, OutsideComponent) {
  EXPECT_THROW(multiplier_at({1.3, 0.0}), DomainError);
  EXPECT_THROW(multiplier_at(7.0), DomainError);
  EXPECT_THROW(multiplier_at(0.5), DomainError);
}

TEST(SolveMultiplier, IdentityTakesNoSteps) {
  const Complex lam = multiplier_at(5.25);
  const SolveReport r = solve_multiplier(5.25, lam);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.steps, 0);
  EXPECT_EQ(r.a_star, Complex{5.25});
  EXPECT_EQ(r.residual, 0.0);
}

TEST(SolveMultiplier, RoundTripTargets) {
  for (int k = 0; k < 8; ++k) {
    const Complex t = std::polar(0.5, 2 * std::numbers::pi * k / 8);
    const SolveReport r = solve_multiplier(5.25, t);
    ASSERT_TRUE(r.converged) << t << " " << r.failure;
    EXPECT_LT(r.residual, 1e-8) << t;
    // Independent re-evaluation at the solution.
    EXPECT_LT(std::abs(multiplier_at(r.a_star) - t), 1e-8) << t;
    EXPECT_EQ(r.period, 2);
  }
}

TEST(SolveMultiplier, DistinctTargetsGiveDistinctParameters) {
  const SolveReport a = solve_multiplier(5.25, {0.3, 0.1});
  const SolveReport b = solve_multiplier(5.25, {0.3, 0.12});
  ASSERT_TRUE(a.converged && b.converged);
  EXPECT_GT(std::abs(a.a_star - b.a_star), 1e-6);
}

TEST(SolveMultiplier, Preconditions) {
  EXPECT_THROW(solve_multiplier({1.07398, 0.5579}, 0.0), DomainError);
  EXPECT_THROW(solve_multiplier(5.25, 1.2), DomainError);
  EXPECT_THROW(solve_multiplier(1.5, 0.0), DomainError);
}

TEST(Centers, ZeroTargetAgreesWithReturnEquation) {
  const SolveReport viaSolve = solve_multiplier(5.25, 0.0);
  const SolveReport center = find_superattracting(5.25, 2);
  ASSERT_TRUE(viaSolve.converged);
  ASSERT_TRUE(center.converged) << center.failure;
  EXPECT_LT(std::abs(viaSolve.a_star - center.a_star), 1e-7);
  EXPECT_LT(center.orbit_residual, 1e-10);
  EXPECT_LT(std::abs(multiplier_at(center.a_star)), 1e-6);
}

TEST(Centers, ConjugateSeedGivesConjugateCenter) {
  // Inside a swapping-disjoint component off the real axis.
  const Complex seed{-3.222639576, 5.581861251};
  const ParamClassRecord r = classify_parameter(seed);
  ASSERT_TRUE(r.cycle_plus);
  const int period = r.cycle_plus->period;
  const SolveReport up = find_superattracting(seed, period);
  const SolveReport down = find_superattracting(std::conj(seed), period);
  ASSERT_TRUE(up.converged && down.converged);
  EXPECT_LT(std::abs(std::conj(up.a_star) - down.a_star), 1e-7);
}
