#pragma once

// Iteration kernel shared by the Blaschke family and the comparison
// polynomials. A map supplies one step and the chain-rule update of the
// derivative accumulator; antiholomorphic maps accumulate d/dz-bar on odd
// compositions and d/dz on even ones.

#include <cmath>
#include <concepts>
#include <optional>

#include "blaschke/orbit.hpp"

namespace blaschke::detail {

template <class M>
concept IteratedMap = requires(const M& m, Complex z, Complex d) {
  { m.step(z) } -> std::same_as<ExtComplex>;
  { m.chain(z, d) } -> std::same_as<Complex>;
  { M::kAntiholomorphic } -> std::convertible_to<bool>;
};

struct KernelBounds {
  double outer = 0.0;         // |z| > outer escapes to infinity
  double inner = 0.0;         // |z| < inner escapes to zero (0 disables)
  bool track_circle = false;  // count crossings of the unit circle
  bool lock_to_circle = false;
};

inline double scale_of(Complex z) { return std::max(1.0, std::abs(z)); }

/// Newton's method on F^p(z) - z from `z`. Returns the polished point, or
/// nullopt if an iterate escapes or the step stops shrinking the residual.
template <IteratedMap M>
std::optional<Complex> polish_cycle_point(const M& map, Complex z, int period, bool lock) {
  auto residual = [&](Complex x, Complex& deriv) -> std::optional<Complex> {
    Complex w = x;
    Complex d{1.0, 0.0};
    for (int i = 0; i < period; ++i) {
      const ExtComplex next = map.step(w);
      if (next.is_infinite()) return std::nullopt;
      d = map.chain(w, d);
      w = next.value();
      if (lock) w /= std::abs(w);
    }
    deriv = d;
    return w - x;
  };

  const bool anti = M::kAntiholomorphic && (period % 2 == 1);
  Complex d{};
  auto g = residual(z, d);
  if (!g) return std::nullopt;
  for (int it = 0; it < 60; ++it) {
    const double tiny = 4e-16 * scale_of(z);
    if (std::abs(*g) <= tiny) return z;
    Complex delta;
    if (anti) {
      // g + (-1) delta + D conj(delta) = 0
      const double den = 1.0 - std::norm(d);
      if (std::abs(den) < 1e-14) return std::nullopt;
      delta = (*g + d * std::conj(*g)) / den;
    } else {
      const Complex den = 1.0 - d;
      if (std::abs(den) < 1e-14) return std::nullopt;
      delta = *g / den;
    }
    bool accepted = false;
    for (int halving = 0; halving < 12; ++halving) {
      Complex trial = z + delta;
      if (lock) trial /= std::abs(trial);
      Complex dt{};
      auto gt = residual(trial, dt);
      if (gt && std::abs(*gt) < std::abs(*g)) {
        z = trial;
        g = gt;
        d = dt;
        accepted = true;
        break;
      }
      delta *= 0.5;
    }
    if (!accepted) return z;  // at the round-off floor
    if (std::abs(delta) <= 1e-16 * scale_of(z)) return z;
  }
  return z;
}

/// Runs the warmup-then-scan cycle detector. The returned cycle carries
/// period, points, multiplier and kind; callers add family-specific flags.
template <IteratedMap M>
Fate iterate_orbit(const M& map, const ExtComplex& start, const OrbitSpec& spec,
                   const KernelBounds& bounds) {
  Fate fate;
  if (start.is_infinite()) {
    fate.tag = FateTag::EscapeInf;
    return fate;
  }

  const double outer2 = bounds.outer * bounds.outer;
  const double inner2 = bounds.inner * bounds.inner;
  const double lo2 = (1.0 - spec.eps_circle) * (1.0 - spec.eps_circle);
  const double hi2 = (1.0 + spec.eps_circle) * (1.0 + spec.eps_circle);

  Complex z = start.value();
  int n = 0;
  int side = 0;  // -1 inside, +1 outside, 0 not yet known

  // Returns false once the orbit has escaped (fate.tag set).
  auto observe = [&]() -> bool {
    const double m2 = std::norm(z);
    if (bounds.track_circle) {
      if (m2 < lo2) {
        if (side == 1) ++fate.entered_disk;
        side = -1;
      } else if (m2 > hi2) {
        if (side == -1) ++fate.left_disk;
        side = 1;
      }
    }
    if (m2 > outer2) {
      fate.tag = FateTag::EscapeInf;
      return false;
    }
    if (m2 < inner2) {
      fate.tag = FateTag::EscapeZero;
      return false;
    }
    return true;
  };

  auto advance = [&]() -> bool {
    const ExtComplex next = map.step(z);
    ++n;
    if (next.is_infinite()) {
      fate.tag = FateTag::EscapeInf;
      return false;
    }
    z = next.value();
    if (bounds.lock_to_circle) z /= std::abs(z);
    return observe();
  };

  auto finish = [&]() {
    fate.iterations_used = n;
    return fate;
  };

  if (!observe()) return finish();

  const int warmup = std::min(spec.warmup, spec.max_iter);
  while (n < warmup) {
    if (!advance()) return finish();
  }

  while (n < spec.max_iter) {
    const Complex base = z;
    const double tol = spec.eps_cycle * scale_of(base);
    int candidate = 0;
    for (int k = 1; k <= kMaxCandidatePeriod && n < spec.max_iter; ++k) {
      if (!advance()) return finish();
      if (std::abs(z - base) < tol) {
        candidate = k;
        break;
      }
    }
    if (candidate == 0) continue;

    // Confirm with a second consecutive return after the same number of steps.
    const Complex again = z;
    const double tol2 = spec.eps_cycle * scale_of(again);
    bool confirmed = false;
    for (int k = 1; k <= candidate && n < spec.max_iter; ++k) {
      if (!advance()) return finish();
      if (k == candidate) confirmed = std::abs(z - again) < tol2;
    }
    if (!confirmed) continue;

    Complex seed = z;
    if (auto polished = polish_cycle_point(map, z, candidate, bounds.lock_to_circle);
        polished && std::abs(*polished - z) < 1e-6 * scale_of(z)) {
      seed = *polished;
    }

    CycleRecord cycle;
    cycle.points.reserve(static_cast<std::size_t>(candidate));
    cycle.points.push_back(seed);
    bool closed = true;
    for (int i = 1; i < candidate; ++i) {
      const ExtComplex next = map.step(cycle.points.back());
      if (next.is_infinite()) {
        closed = false;
        break;
      }
      Complex w = next.value();
      if (bounds.lock_to_circle) w /= std::abs(w);
      cycle.points.push_back(w);
    }
    if (!closed) continue;

    // A return after `candidate` steps may be a multiple of the true period.
    int period = candidate;
    for (int q = 1; q < candidate; ++q) {
      if (candidate % q != 0) continue;
      if (std::abs(cycle.points[static_cast<std::size_t>(q)] - cycle.points[0]) <
          spec.eps_cycle * scale_of(cycle.points[0])) {
        period = q;
        break;
      }
    }
    cycle.points.resize(static_cast<std::size_t>(period));
    cycle.period = period;

    Complex d{1.0, 0.0};
    for (const Complex& w : cycle.points) d = map.chain(w, d);
    cycle.multiplier = d;
    cycle.kind = cycle_kind(d, spec.parabolic_band);

    fate.tag = FateTag::Cycle;
    fate.cycle = std::move(cycle);
    return finish();
  }

  fate.tag = FateTag::Undecided;
  return finish();
}

}  // namespace blaschke::detail
