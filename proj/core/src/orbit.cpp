#include "blaschke/orbit.hpp"

#include <cmath>

#include "blaschke/detail/orbit_kernel.hpp"
#include "blaschke/errors.hpp"

namespace blaschke {

namespace {

// Points this close to |z| = 1 are treated as lying on the invariant circle.
constexpr double kOnCircleStart = 1e-12;

struct BlaschkeMap {
  static constexpr bool kAntiholomorphic = false;
  const BlaschkeParam& param;

  ExtComplex step(Complex z) const { return eval(param, z); }
  Complex chain(Complex z, Complex d) const { return derivative(param, z) * d; }
};

}  // namespace

void OrbitSpec::validate() const {
  if (max_iter <= 0) throw DomainError("OrbitSpec: max_iter must be positive");
  if (!(eps_cycle > 0.0)) throw DomainError("OrbitSpec: eps_cycle must be positive");
  if (!(eps_circle > 0.0)) throw DomainError("OrbitSpec: eps_circle must be positive");
  if (!(escape_factor > 1.0)) throw DomainError("OrbitSpec: escape_factor must exceed 1");
  if (warmup < 0) throw DomainError("OrbitSpec: warmup must be non-negative");
  if (!(parabolic_band > 0.0)) throw DomainError("OrbitSpec: parabolic_band must be positive");
}

CycleKind cycle_kind(Complex multiplier, double parabolic_band) {
  const double m = std::abs(multiplier);
  if (m < 1.0 - parabolic_band) return CycleKind::Attracting;
  if (m <= 1.0 + parabolic_band) return CycleKind::ParabolicSuspect;
  return CycleKind::Repelling;
}

Fate classify_fate(const BlaschkeParam& p, const ExtComplex& z0, const OrbitSpec& spec) {
  spec.validate();
  const double radius = spec.escape_factor * (p.modulus() + 1.0);
  detail::KernelBounds bounds;
  bounds.outer = radius;
  bounds.inner = 1.0 / radius;
  bounds.track_circle = true;
  bounds.lock_to_circle =
      z0.is_finite() && std::abs(std::abs(z0.value()) - 1.0) <= kOnCircleStart;

  Fate fate = detail::iterate_orbit(BlaschkeMap{p}, z0, spec, bounds);
  if (fate.cycle) annotate_cycle(*fate.cycle, spec);
  return fate;
}

Complex cycle_multiplier(const BlaschkeParam& p, std::span<const Complex> points, double eps) {
  if (points.empty()) throw DomainError("cycle_multiplier: empty cycle");
  const std::size_t n = points.size();
  Complex product{1.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const Complex next = points[(i + 1) % n];
    const ExtComplex image = eval(p, points[i]);
    if (image.is_infinite() || std::abs(image.value() - next) > eps * detail::scale_of(next)) {
      throw DomainError("cycle_multiplier: cycle not closed within tolerance");
    }
    product *= derivative(p, points[i]);
  }
  return product;
}

CycleSymmetry cycle_symmetry(std::span<const Complex> points, double eps) {
  CycleSymmetry out;
  if (points.empty()) return out;

  auto close = [eps](Complex u, Complex v) { return std::abs(u - v) < eps * detail::scale_of(v); };
  auto mirror = [](Complex z) {
    // The origin is never on a cycle other than {0}; its mirror is infinity.
    return z == Complex{} ? Complex{INFINITY, 0.0} : z / std::norm(z);
  };

  bool all_found = true;
  for (const Complex& z : points) {
    const Complex r = mirror(z);
    bool found = false;
    for (const Complex& w : points) {
      if (close(r, w)) {
        found = true;
        break;
      }
    }
    if (!found) {
      all_found = false;
      break;
    }
  }
  out.self_symmetric = all_found;

  const Complex target = points[0];
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (close(mirror(points[k]), target)) {
      out.half_period = static_cast<int>(k);
      break;
    }
  }
  return out;
}

void annotate_cycle(CycleRecord& cycle, const OrbitSpec& spec) {
  cycle.period = static_cast<int>(cycle.points.size());
  cycle.on_circle = true;
  cycle.disk_pattern.clear();
  const double inside = 1.0 - spec.eps_circle;
  for (const Complex& z : cycle.points) {
    const double m = std::abs(z);
    if (std::abs(m - 1.0) > spec.eps_circle) cycle.on_circle = false;
    cycle.disk_pattern.push_back(m < inside ? '1' : '0');
  }
  const CycleSymmetry sym = cycle_symmetry(cycle.points, spec.eps_cycle);
  cycle.self_symmetric = sym.self_symmetric;
  cycle.half_period = sym.half_period;
}

CycleRecord reflect_cycle(const BlaschkeParam& p, const CycleRecord& cycle, const OrbitSpec& spec) {
  CycleRecord out;
  out.points.reserve(cycle.points.size());
  for (const Complex& z : cycle.points) out.points.push_back(reflect(z));
  try {
    out.multiplier = cycle_multiplier(p, out.points, std::max(spec.eps_cycle, 1e-9));
  } catch (const DomainError&) {
    // Mirror of a cycle that was never polished; fall back to the plain product.
    Complex d{1.0, 0.0};
    for (const Complex& z : out.points) d *= derivative(p, z);
    out.multiplier = d;
  }
  out.kind = cycle_kind(out.multiplier, spec.parabolic_band);
  annotate_cycle(out, spec);
  return out;
}

bool same_cycle(const CycleRecord& lhs, const CycleRecord& rhs, double eps) {
  if (lhs.points.empty() || rhs.points.empty()) return false;
  const Complex z = lhs.points.front();
  for (const Complex& w : rhs.points) {
    if (std::abs(z - w) < eps * detail::scale_of(w)) return true;
  }
  return false;
}

std::string to_string(FateTag tag) {
  switch (tag) {
    case FateTag::EscapeZero: return "escape-zero";
    case FateTag::EscapeInf: return "escape-inf";
    case FateTag::Cycle: return "cycle";
    case FateTag::Undecided: return "undecided";
  }
  return "undecided";
}

std::string to_string(CycleKind kind) {
  switch (kind) {
    case CycleKind::Attracting: return "attracting";
    case CycleKind::ParabolicSuspect: return "parabolic-suspect";
    case CycleKind::Repelling: return "repelling";
  }
  return "repelling";
}

}  // namespace blaschke
