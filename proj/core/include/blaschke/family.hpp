#pragma once

// The degree 4 Blaschke family B_a(z) = z^3 (z - a) / (1 - conj(a) z) on the
// Riemann sphere: evaluation, derivative, free critical points and the
// reflection I(z) = 1 / conj(z) that every member commutes with.

#include <complex>
#include <numbers>

namespace blaschke {

using Complex = std::complex<double>;

/// |a| closer than this to 1 is treated as the degenerate member -a z^3.
inline constexpr double kDegenerateTolerance = 1e-12;

/// A point of the Riemann sphere. Infinity is a tag, never a huge finite value.
class ExtComplex {
 public:
  constexpr ExtComplex() = default;
  /// Throws DomainError when either coordinate is NaN or infinite.
  ExtComplex(Complex z);  // NOLINT(google-explicit-constructor)

  static constexpr ExtComplex infinity() {
    ExtComplex p;
    p.infinite_ = true;
    return p;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  /// Finite coordinate. Throws DomainError for the point at infinity.
  Complex value() const;

  friend bool operator==(const ExtComplex& lhs, const ExtComplex& rhs) {
    if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ == rhs.infinite_;
    return lhs.z_ == rhs.z_;
  }

 private:
  Complex z_{0.0, 0.0};
  bool infinite_ = false;
};

/// Where |a| sits relative to the thresholds 1 and 2 that change the dynamics.
enum class Regime {
  Disk,        // |a| < 1: Julia set is the unit circle
  Degenerate,  // |a| = 1: collapses to -a z^3
  Circle,      // 1 < |a| < 2: both free critical points on the unit circle
  Exterior,    // |a| >= 2: critical points symmetric about the circle
};

/// Parameter of one family member. A rotation t in [0,1) is folded into `a`
/// at construction (B_{a,t} is conjugate to B_{a e^{2 pi i t / 3}}), so the
/// stored parameter always has t = 0.
class BlaschkeParam {
 public:
  explicit BlaschkeParam(Complex a, double t = 0.0);

  Complex a() const noexcept { return a_; }
  Complex a_conj() const noexcept { return a_conj_; }
  double modulus() const noexcept { return modulus_; }
  bool degenerate() const noexcept { return regime_ == Regime::Degenerate; }
  Regime regime() const noexcept { return regime_; }

 private:
  Complex a_;
  Complex a_conj_;
  double modulus_;
  Regime regime_;
};

struct CriticalData {
  Complex c_plus;   // |c_plus| >= 1
  Complex c_minus;  // |c_minus| <= 1
  Complex zero;     // = a
  Complex pole;     // = 1 / conj(a)
};

/// B_a(z). Total on the sphere; NaN never reaches here (ExtComplex rejects it).
ExtComplex eval(const BlaschkeParam& p, const ExtComplex& z);

/// Finite-input overload used by the iteration kernels.
ExtComplex eval(const BlaschkeParam& p, Complex z);

/// dB_a/dz. Throws DomainError("derivative at pole") at z = 1 / conj(a).
Complex derivative(const BlaschkeParam& p, Complex z);

/// Free critical points c_+ and c_-. Throws DomainError("degenerate parameter")
/// when |a| = 1 and for a = 0, where c_+ sits at infinity.
CriticalData critical_points(const BlaschkeParam& p);

/// I(z) = 1 / conj(z), with I(0) = infinity and I(infinity) = 0.
ExtComplex reflect(const ExtComplex& z);
Complex reflect(Complex z);

/// e^{2 pi i t} z^3 (z - a) / (1 - conj(a) z) without folding t into a.
/// Only meant for checking the rotation conjugacy.
Complex eval_rotated(Complex a, double t, Complex z);

/// Primitive cube root of unity e^{2 pi i / 3}.
inline Complex cube_root_of_unity() {
  return std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
}

}  // namespace blaschke
