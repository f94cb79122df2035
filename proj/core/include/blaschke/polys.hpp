#pragma once

// Comparison families: the cubic M_b(z) = b z^2 (z - 1), the antipolynomial
// p_c(z) = conj(z)^2 + c, its second iterate (z^2 + conj(c))^2 + c, and the
// quadratic z^2 + c. Each has a single free critical point.

#include <string_view>

#include "blaschke/atlas.hpp"
#include "blaschke/family.hpp"
#include "blaschke/orbit.hpp"

namespace blaschke {

enum class PolyFamily { CubicM, AntiquadraticP, AntiquadraticSquared, Quadratic };

struct PolyFamilyMember {
  PolyFamily family = PolyFamily::Quadratic;
  Complex parameter{};
};

Complex poly_eval(const PolyFamilyMember& m, Complex z);

/// 2/3 for the cubic family, 0 otherwise.
Complex free_critical_point(PolyFamily family);

/// max(4, 2(|parameter| + 1)); for the cubic also at least 2 / sqrt(|b|) so
/// that |z| > R forces |M_b(z)| > 2|z|.
double poly_escape_radius(const PolyFamilyMember& m);

/// Orbit of the free critical point, with cycle detection as for B_a. For
/// p_c on an odd period the multiplier is the antiholomorphic derivative
/// d/dz-bar of p_c^k.
Fate poly_classify(const PolyFamilyMember& m, const OrbitSpec& spec);

/// d/dz-bar of p_c^k at z for odd k, d/dz for even k (chain rule with
/// alternating conjugations).
Complex antiquadratic_iterate_derivative(Complex c, Complex z, int k);

/// True when the cycle is the superattracting fixed point z = 0.
bool is_zero_cycle(const CycleRecord& cycle);

struct CubicMatch {
  Complex b_star{};
  double residual = 0.0;  // |lambda_M(b_star) - target|
  int period = 0;
  Complex target{};       // multiplier being matched
  Complex achieved{};     // lambda_M(b_star)
  int steps = 0;
};

/// Finds b near b_seed whose free-critical cycle of M_b has the given period
/// and multiplier. Throws DomainError if M_{b_seed} has no attracting cycle
/// of that period (other than z = 0) and NumericError on non-convergence.
CubicMatch match_cubic_to_multiplier(Complex target, int period, Complex b_seed, const OrbitSpec& spec);

/// Matches the multiplier of the exterior attracting cycle of B_a. Throws
/// DomainError when B_a has no attracting cycle that stays outside the closed
/// unit disk.
CubicMatch match_cubic_multiplier(Complex a, Complex b_seed, const OrbitSpec& spec);

/// Coarse scan of a b-window for the pixel whose cycle has the wanted period
/// and multiplier closest to `target`. Returns nullopt if no pixel qualifies.
std::optional<Complex> coarse_cubic_seed(Complex target, int period, const PlaneSpec& window);

struct PolyPixel {
  Complex parameter{};
  FateTag tag = FateTag::Undecided;
  bool zero_cycle = false;
  int period = 0;
  Complex multiplier{};
  int iterations = 0;
};

Grid<PolyPixel> poly_plane_grid(PolyFamily family, const PlaneSpec& window, int threads = 1);

std::string_view to_string(PolyFamily family);
/// Accepts "cubic", "antiquadratic", "antiquadratic-squared", "quadratic".
PolyFamily parse_family(std::string_view name);

}  // namespace blaschke
