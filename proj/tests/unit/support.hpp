#pragma once

// Independent oracles and seeded generators shared by the unit tests.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "blaschke/family.hpp"

namespace testing_support {

using Complex = std::complex<double>;

// Straight transcription of z^3 (z - a) / (1 - conj(a) z).
inline Complex blaschke_formula(Complex a, Complex z) {
  return z * z * z * (z - a) / (1.0 - std::conj(a) * z);
}

// Central differences along x and y, combined into the Wirtinger derivatives.
template <class F>
void wirtinger(F f, Complex z, double h, Complex& dz, Complex& dzbar) {
  const Complex fx = (f(z + Complex{h, 0}) - f(z - Complex{h, 0})) / (2 * h);
  const Complex fy = (f(z + Complex{0, h}) - f(z - Complex{0, h})) / (2 * h);
  dz = 0.5 * (fx - Complex{0, 1} * fy);
  dzbar = 0.5 * (fx + Complex{0, 1} * fy);
}

// Roots of c2 z^2 + c1 z + c0 by Weierstrass iteration, no closed form.
inline std::pair<Complex, Complex> weierstrass_quadratic(Complex c2, Complex c1, Complex c0) {
  const Complex b = c1 / c2;
  const Complex c = c0 / c2;
  Complex r0{0.4, 0.9};
  Complex r1 = Complex{-0.7, 0.3} * std::max(1.0, std::abs(b));
  for (int it = 0; it < 500; ++it) {
    r0 -= (r0 * r0 + b * r0 + c) / (r0 - r1);
    r1 -= (r1 * r1 + b * r1 + c) / (r1 - r0);
  }
  return {r0, r1};
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Complex polar(double rmin, double rmax) {
    return std::polar(uniform(rmin, rmax), uniform(0.0, 2 * std::numbers::pi));
  }

  Complex box(double half) { return {uniform(-half, half), uniform(-half, half)}; }

  // Parameter with |a| in [rmin, rmax], away from the degenerate circle.
  Complex parameter(double rmin, double rmax) {
    Complex a;
    do {
      a = polar(rmin, rmax);
    } while (std::abs(std::abs(a) - 1.0) < 1e-6);
    return a;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing_support
