#pragma once

// Damped Newton iteration for a map R^2 -> R^2 written over Complex, with a
// central finite-difference Jacobian. Used where the dependence on the
// unknown is not holomorphic (the Blaschke parameter enters through conj(a)).

#include <cmath>
#include <limits>
#include <optional>

#include "blaschke/family.hpp"

namespace blaschke::detail {

struct Newton2dOptions {
  double fd_scale = 1e-6;  // step = fd_scale * max(1, |x|)
  int max_steps = 40;
  double tolerance = 1e-13;
  double max_conditioning = 1e8;
  int max_halvings = 12;
};

enum class NewtonStatus { Converged, Stagnated, IllConditioned, Invalid, MaxSteps };

struct Newton2dResult {
  Complex x{};
  Complex value{};
  double residual = std::numeric_limits<double>::infinity();
  int steps = 0;
  double conditioning = 1.0;
  NewtonStatus status = NewtonStatus::Invalid;
};

/// 2-norm condition number of [[j00, j01], [j10, j11]].
inline double condition_number(double j00, double j01, double j10, double j11) {
  const double a = j00 * j00 + j10 * j10;
  const double b = j00 * j01 + j10 * j11;
  const double d = j01 * j01 + j11 * j11;
  const double half_trace = 0.5 * (a + d);
  const double det = a * d - b * b;
  const double disc = std::sqrt(std::max(0.0, half_trace * half_trace - det));
  const double hi = half_trace + disc;
  const double lo = half_trace - disc;
  if (lo <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(hi / lo);
}

/// Solve f(x) = target. `f` returns nullopt where it is not defined (for
/// example when the tracked cycle changes period); such trial points are
/// rejected by step halving.
template <class F>
Newton2dResult newton2d(F&& f, Complex x0, Complex target, const Newton2dOptions& opt) {
  Newton2dResult out;
  out.x = x0;
  const std::optional<Complex> f0 = f(x0);
  if (!f0) return out;
  out.value = *f0;
  out.residual = std::abs(*f0 - target);

  while (out.residual > opt.tolerance) {
    if (out.steps >= opt.max_steps) {
      out.status = NewtonStatus::MaxSteps;
      return out;
    }
    const double h = opt.fd_scale * std::max(1.0, std::abs(out.x));
    const auto fxp = f(out.x + Complex{h, 0.0});
    const auto fxm = f(out.x - Complex{h, 0.0});
    const auto fyp = f(out.x + Complex{0.0, h});
    const auto fym = f(out.x - Complex{0.0, h});
    if (!fxp || !fxm || !fyp || !fym) {
      out.status = NewtonStatus::Invalid;
      return out;
    }
    const Complex dx = (*fxp - *fxm) / (2.0 * h);
    const Complex dy = (*fyp - *fym) / (2.0 * h);
    const double j00 = dx.real();
    const double j01 = dy.real();
    const double j10 = dx.imag();
    const double j11 = dy.imag();
    out.conditioning = condition_number(j00, j01, j10, j11);
    if (out.conditioning > opt.max_conditioning) {
      out.status = NewtonStatus::IllConditioned;
      return out;
    }
    const Complex r = out.value - target;
    const double det = j00 * j11 - j01 * j10;
    const double sx = -(j11 * r.real() - j01 * r.imag()) / det;
    const double sy = -(-j10 * r.real() + j00 * r.imag()) / det;
    Complex step{sx, sy};

    bool accepted = false;
    for (int k = 0; k <= opt.max_halvings; ++k) {
      const Complex trial = out.x + step;
      const auto ft = f(trial);
      if (ft && std::abs(*ft - target) < out.residual) {
        out.x = trial;
        out.value = *ft;
        out.residual = std::abs(*ft - target);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    ++out.steps;
    if (!accepted) {
      out.status = NewtonStatus::Stagnated;
      return out;
    }
  }
  out.status = NewtonStatus::Converged;
  return out;
}

}  // namespace blaschke::detail
