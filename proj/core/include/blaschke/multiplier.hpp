#pragma once

// The multiplier map on hyperbolic components of |a| > 2: evaluation,
// inversion by continuation, and location of superattracting centres.

#include <string>

#include "blaschke/family.hpp"
#include "blaschke/orbit.hpp"

namespace blaschke {

struct SolveOptions {
  int max_homotopy_steps = 32;
  int max_newton_steps = 40;  // per homotopy stage
  double tolerance = 1e-8;    // accepted |achieved - target|
  double max_conditioning = 1e8;
};

struct SolveReport {
  Complex a_star{};
  Complex target{};
  Complex achieved{};
  double residual = 0.0;  // |achieved - target|
  int steps = 0;          // Newton steps summed over all stages
  double jacobian_conditioning = 1.0;
  int period = 0;
  bool converged = false;
  std::string failure;          // empty when converged
  double orbit_residual = 0.0;  // |B^p(c_plus) - c_plus| at a_star
};

/// Multiplier of the attracting cycle reached by c_plus. Throws DomainError
/// "outside hyperbolic component" when there is none.
Complex multiplier_at(Complex a, const OrbitSpec& spec = {});

/// Solves Lambda(a) = target starting from a disjoint parameter with
/// |a_seed| > 2. Numeric trouble (period change, ill-conditioned Jacobian,
/// stagnation) is reported through `converged`/`failure`; violated
/// preconditions throw DomainError.
SolveReport solve_multiplier(Complex a_seed, Complex target, const OrbitSpec& spec = {},
                             const SolveOptions& opts = {});

/// Solves B_a^p(c_plus(a)) = c_plus(a) near a_seed.
SolveReport find_superattracting(Complex a_seed, int period, const OrbitSpec& spec = {},
                                 const SolveOptions& opts = {});

}  // namespace blaschke
