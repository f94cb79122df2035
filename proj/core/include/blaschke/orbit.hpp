#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blaschke/family.hpp"

namespace blaschke {

/// Iteration budget and tolerances for classifying a single orbit.
struct OrbitSpec {
  int max_iter = 100'000;
  double eps_cycle = 1e-9;       // near-return tolerance, relative to max(1, |z|)
  double eps_circle = 1e-6;      // dead band around the unit circle
  double escape_factor = 2.0;    // escape radius R = escape_factor * (|a| + 1)
  int warmup = 200;
  double parabolic_band = 1e-3;  // |lambda| within this of 1 is parabolic-suspect

  /// Defaults used for per-pixel grid work.
  static OrbitSpec grid() {
    OrbitSpec s;
    s.max_iter = 5'000;
    return s;
  }

  /// Throws DomainError unless every tolerance is positive and escape_factor > 1.
  void validate() const;
};

/// Longest period the near-return scan will look for.
inline constexpr int kMaxCandidatePeriod = 512;

enum class CycleKind { Attracting, ParabolicSuspect, Repelling };

struct CycleRecord {
  int period = 0;
  std::vector<Complex> points;  // z_0 .. z_{p-1}, z_{i+1} = B(z_i)
  Complex multiplier{};
  CycleKind kind = CycleKind::Attracting;
  bool on_circle = false;
  bool self_symmetric = false;
  std::optional<int> half_period;  // minimal k >= 1 with reflect(z_k) ~ z_0
  std::string disk_pattern;        // '1' where |z_i| < 1 - eps_circle, '0' otherwise

  bool attracting() const noexcept { return kind == CycleKind::Attracting; }
};

enum class FateTag { EscapeZero, EscapeInf, Cycle, Undecided };

struct Fate {
  FateTag tag = FateTag::Undecided;
  std::optional<CycleRecord> cycle;  // engaged iff tag == Cycle
  int iterations_used = 0;
  int entered_disk = 0;  // crossings of |z| = 1 from outside to inside
  int left_disk = 0;     // crossings from inside to outside
};

/// Iterate z0 under B_a until it leaves the escape annulus, settles on a
/// cycle, or the budget runs out. Orbits that start on the unit circle are
/// held on it (the circle is invariant, round-off is not).
Fate classify_fate(const BlaschkeParam& p, const ExtComplex& z0, const OrbitSpec& spec);

/// Product of B_a' over the cycle. Throws DomainError if B_a does not map each
/// point to the next within `eps` (relative to max(1, |z|)).
Complex cycle_multiplier(const BlaschkeParam& p, std::span<const Complex> points,
                         double eps = 1e-9);

struct CycleSymmetry {
  bool self_symmetric = false;
  std::optional<int> half_period;
};

/// Does reflection map the cycle onto itself, and after how many steps.
CycleSymmetry cycle_symmetry(std::span<const Complex> points, double eps);

/// Fill on_circle, symmetry and disk pattern of a cycle whose points,
/// multiplier and kind are already set.
void annotate_cycle(CycleRecord& cycle, const OrbitSpec& spec);

/// Reflected cycle I(z_i), with its own multiplier computed from the points.
CycleRecord reflect_cycle(const BlaschkeParam& p, const CycleRecord& cycle, const OrbitSpec& spec);

/// True when the two cycles share a point (within `eps` relative).
bool same_cycle(const CycleRecord& lhs, const CycleRecord& rhs, double eps);

/// Classify a multiplier against the parabolic band.
CycleKind cycle_kind(Complex multiplier, double parabolic_band);

std::string to_string(FateTag tag);
std::string to_string(CycleKind kind);

}  // namespace blaschke
