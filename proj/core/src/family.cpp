#include "blaschke/family.hpp"

#include <cmath>

#include "blaschke/errors.hpp"

namespace blaschke {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Regime regime_of(double modulus) {
  if (std::abs(modulus - 1.0) <= kDegenerateTolerance) return Regime::Degenerate;
  if (modulus < 1.0) return Regime::Disk;
  if (modulus < 2.0) return Regime::Circle;
  return Regime::Exterior;
}

}  // namespace

ExtComplex::ExtComplex(Complex z) : z_(z) {
  if (!finite(z)) throw DomainError("ExtComplex: non-finite coordinate");
}

Complex ExtComplex::value() const {
  if (infinite_) throw DomainError("ExtComplex: point at infinity has no finite value");
  return z_;
}

BlaschkeParam::BlaschkeParam(Complex a, double t) {
  if (!finite(a)) throw DomainError("BlaschkeParam: parameter must be finite");
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("BlaschkeParam: rotation t must lie in [0,1)");
  a_ = t == 0.0 ? a : a * std::polar(1.0, 2.0 * std::numbers::pi * t / 3.0);
  a_conj_ = std::conj(a_);
  modulus_ = std::abs(a_);
  regime_ = regime_of(modulus_);
}

ExtComplex eval(const BlaschkeParam& p, Complex z) {
  if (std::isnan(z.real()) || std::isnan(z.imag())) throw DomainError("eval: NaN input");
  if (p.degenerate()) {
    const Complex w = -p.a() * z * z * z;
    if (!finite(w)) return ExtComplex::infinity();
    return w;
  }
  const Complex az = p.a_conj() * z;
  const Complex den = 1.0 - az;
  if (std::abs(den) < 1e-300 * std::max(1.0, std::abs(az))) return ExtComplex::infinity();
  const Complex w = z * z * z * (z - p.a()) / den;
  if (!finite(w)) return ExtComplex::infinity();
  return w;
}

ExtComplex eval(const BlaschkeParam& p, const ExtComplex& z) {
  if (z.is_infinite()) return ExtComplex::infinity();
  return eval(p, z.value());
}

Complex derivative(const BlaschkeParam& p, Complex z) {
  if (!finite(z)) throw DomainError("derivative: non-finite input");
  if (p.degenerate()) return -3.0 * p.a() * z * z;
  const Complex ac = p.a_conj();
  const Complex den = 1.0 - ac * z;
  if (std::abs(den) < 1e-300 * std::max(1.0, std::abs(ac * z))) {
    throw DomainError("derivative at pole");
  }
  const double r2 = std::norm(p.a());
  // B'(z) = z^2 (-3 conj(a) z^2 + (4 + 2|a|^2) z - 3a) / (1 - conj(a) z)^2
  const Complex quad = (-3.0 * ac * z + (4.0 + 2.0 * r2)) * z - 3.0 * p.a();
  return z * z * quad / (den * den);
}

CriticalData critical_points(const BlaschkeParam& p) {
  if (p.degenerate()) throw DomainError("degenerate parameter");
  const Complex a = p.a();
  const double r2 = std::norm(a);
  if (r2 == 0.0) throw DomainError("critical points undefined at a = 0 (c_plus at infinity)");

  const double radicand = (r2 - 4.0) * (r2 - 1.0);
  const double base = 2.0 + r2;
  Complex k_plus;
  Complex k_minus;
  if (radicand >= 0.0) {
    // (base + s)(base - s) = 9 r2, which avoids cancellation in the minus root.
    const double s = std::sqrt(radicand);
    const double big = base + s;
    k_plus = big / (3.0 * r2);
    k_minus = 3.0 / big;
  } else {
    const double s = std::sqrt(-radicand);
    k_plus = Complex{base, s} / (3.0 * r2);
    k_minus = Complex{base, -s} / (3.0 * r2);
  }
  return CriticalData{a * k_plus, a * k_minus, a, 1.0 / p.a_conj()};
}

Complex reflect(Complex z) {
  if (z == Complex{}) throw DomainError("reflect: 0 maps to infinity; use the ExtComplex overload");
  return z / std::norm(z);
}

ExtComplex reflect(const ExtComplex& z) {
  if (z.is_infinite()) return Complex{};
  const Complex w = z.value();
  if (w == Complex{}) return ExtComplex::infinity();
  const Complex r = w / std::norm(w);
  if (!finite(r)) return ExtComplex::infinity();
  return r;
}

Complex eval_rotated(Complex a, double t, Complex z) {
  return std::polar(1.0, 2.0 * std::numbers::pi * t) * z * z * z * (z - a) / (1.0 - std::conj(a) * z);
}

}  // namespace blaschke
