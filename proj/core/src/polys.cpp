#include "blaschke/polys.hpp"

#include <cmath>
#include <limits>

#include "blaschke/detail/newton2d.hpp"
#include "blaschke/detail/orbit_kernel.hpp"
#include "blaschke/errors.hpp"
#include "blaschke/parallel.hpp"

namespace blaschke {

namespace {

ExtComplex to_ext(Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return ExtComplex::infinity();
  return w;
}

struct CubicMap {
  static constexpr bool kAntiholomorphic = false;
  Complex b;
  ExtComplex step(Complex z) const { return to_ext(b * z * z * (z - 1.0)); }
  Complex chain(Complex z, Complex d) const { return b * z * (3.0 * z - 2.0) * d; }
};

struct AntiquadraticMap {
  static constexpr bool kAntiholomorphic = true;
  Complex c;
  ExtComplex step(Complex z) const {
    const Complex w = std::conj(z);
    return to_ext(w * w + c);
  }
  // d/dz-bar of conj(z)^2 + c is 2 conj(z); composing flips the accumulator.
  Complex chain(Complex z, Complex d) const { return std::conj(2.0 * z * d); }
};

struct AntiquadraticSquaredMap {
  static constexpr bool kAntiholomorphic = false;
  Complex c;
  ExtComplex step(Complex z) const {
    const Complex inner = z * z + std::conj(c);
    return to_ext(inner * inner + c);
  }
  Complex chain(Complex z, Complex d) const { return 4.0 * z * (z * z + std::conj(c)) * d; }
};

struct QuadraticMap {
  static constexpr bool kAntiholomorphic = false;
  Complex c;
  ExtComplex step(Complex z) const { return to_ext(z * z + c); }
  Complex chain(Complex z, Complex d) const { return 2.0 * z * d; }
};

template <class M>
Fate run(const M& map, const PolyFamilyMember& m, const OrbitSpec& spec) {
  detail::KernelBounds bounds;
  bounds.outer = poly_escape_radius(m);
  return detail::iterate_orbit(map, ExtComplex(free_critical_point(m.family)), spec, bounds);
}

std::optional<Complex> cubic_cycle_multiplier(Complex b, int period, const OrbitSpec& spec) {
  const Fate f = poly_classify({PolyFamily::CubicM, b}, spec);
  if (f.tag != FateTag::Cycle || !f.cycle->attracting() || is_zero_cycle(*f.cycle)) return std::nullopt;
  if (f.cycle->period != period) return std::nullopt;
  return f.cycle->multiplier;
}

}  // namespace

Complex poly_eval(const PolyFamilyMember& m, Complex z) {
  const Complex c = m.parameter;
  switch (m.family) {
    case PolyFamily::CubicM: return c * z * z * (z - 1.0);
    case PolyFamily::AntiquadraticP: {
      const Complex w = std::conj(z);
      return w * w + c;
    }
    case PolyFamily::AntiquadraticSquared: {
      const Complex inner = z * z + std::conj(c);
      return inner * inner + c;
    }
    case PolyFamily::Quadratic: return z * z + c;
  }
  return z * z + c;
}

Complex free_critical_point(PolyFamily family) {
  return family == PolyFamily::CubicM ? Complex{2.0 / 3.0, 0.0} : Complex{};
}

double poly_escape_radius(const PolyFamilyMember& m) {
  const double mod = std::abs(m.parameter);
  double r = std::max(4.0, 2.0 * (mod + 1.0));
  if (m.family == PolyFamily::CubicM && mod > 0.0) r = std::max(r, 2.0 / std::sqrt(mod));
  return r;
}

Fate poly_classify(const PolyFamilyMember& m, const OrbitSpec& spec) {
  spec.validate();
  Fate fate;
  switch (m.family) {
    case PolyFamily::CubicM: fate = run(CubicMap{m.parameter}, m, spec); break;
    case PolyFamily::AntiquadraticP: fate = run(AntiquadraticMap{m.parameter}, m, spec); break;
    case PolyFamily::AntiquadraticSquared: fate = run(AntiquadraticSquaredMap{m.parameter}, m, spec); break;
    case PolyFamily::Quadratic: fate = run(QuadraticMap{m.parameter}, m, spec); break;
  }
  if (fate.cycle) fate.cycle->period = static_cast<int>(fate.cycle->points.size());
  return fate;
}

Complex antiquadratic_iterate_derivative(Complex c, Complex z, int k) {
  const AntiquadraticMap map{c};
  Complex d{1.0, 0.0};
  Complex w = z;
  for (int i = 0; i < k; ++i) {
    d = map.chain(w, d);
    const Complex cw = std::conj(w);
    w = cw * cw + c;
  }
  return d;
}

bool is_zero_cycle(const CycleRecord& cycle) {
  return cycle.period == 1 && !cycle.points.empty() && std::abs(cycle.points[0]) < 1e-12;
}

CubicMatch match_cubic_to_multiplier(Complex target, int period, Complex b_seed, const OrbitSpec& spec) {
  auto lambda_of = [&](Complex b) { return cubic_cycle_multiplier(b, period, spec); };
  if (!lambda_of(b_seed)) {
    throw DomainError("match_cubic: M_b at the seed has no attracting cycle of period " +
                      std::to_string(period));
  }
  detail::Newton2dOptions opt;
  const detail::Newton2dResult res = detail::newton2d(lambda_of, b_seed, target, opt);
  if (!(res.residual < 1e-8)) {
    throw NumericError("match_cubic: multiplier search did not converge", res.residual);
  }
  CubicMatch out;
  out.b_star = res.x;
  out.residual = res.residual;
  out.period = period;
  out.target = target;
  out.achieved = res.value;
  out.steps = res.steps;
  return out;
}

CubicMatch match_cubic_multiplier(Complex a, Complex b_seed, const OrbitSpec& spec) {
  const ParamClassRecord rec = classify_parameter(a, spec);
  const bool exterior = rec.cycle_plus && rec.cycle_plus->attracting() && !rec.cycle_plus->on_circle &&
                        !rec.swapping && rec.cycle_plus->disk_pattern.find('1') == std::string::npos;
  if (!exterior) throw DomainError("match_cubic: no attracting exterior cycle at this parameter");
  return match_cubic_to_multiplier(rec.cycle_plus->multiplier, rec.cycle_plus->period, b_seed, spec);
}

std::optional<Complex> coarse_cubic_seed(Complex target, int period, const PlaneSpec& window) {
  window.validate();
  std::optional<Complex> best;
  double best_distance = std::numeric_limits<double>::infinity();
  for (int iy = 0; iy < window.ny; ++iy) {
    for (int ix = 0; ix < window.nx; ++ix) {
      const Complex b = window.pixel_center(ix, iy);
      const auto lambda = cubic_cycle_multiplier(b, period, window.orbit);
      if (!lambda) continue;
      const double d = std::abs(*lambda - target);
      if (d < best_distance) {
        best_distance = d;
        best = b;
      }
    }
  }
  return best;
}

Grid<PolyPixel> poly_plane_grid(PolyFamily family, const PlaneSpec& window, int threads) {
  window.validate();
  Grid<PolyPixel> grid;
  grid.width = window.nx;
  grid.height = window.ny;
  grid.cells.resize(static_cast<std::size_t>(window.nx) * static_cast<std::size_t>(window.ny));
  parallel_rows(window.ny, threads, [&](int iy) {
    for (int ix = 0; ix < window.nx; ++ix) {
      PolyPixel& px = grid.at(ix, iy);
      px.parameter = window.pixel_center(ix, iy);
      const Fate f = poly_classify({family, px.parameter}, window.orbit);
      px.tag = f.tag;
      px.iterations = f.iterations_used;
      if (f.cycle) {
        px.period = f.cycle->period;
        px.multiplier = f.cycle->multiplier;
        px.zero_cycle = is_zero_cycle(*f.cycle);
      }
    }
  });
  return grid;
}

std::string_view to_string(PolyFamily family) {
  switch (family) {
    case PolyFamily::CubicM: return "cubic";
    case PolyFamily::AntiquadraticP: return "antiquadratic";
    case PolyFamily::AntiquadraticSquared: return "antiquadratic-squared";
    case PolyFamily::Quadratic: return "quadratic";
  }
  return "quadratic";
}

PolyFamily parse_family(std::string_view name) {
  for (PolyFamily f : {PolyFamily::CubicM, PolyFamily::AntiquadraticP, PolyFamily::AntiquadraticSquared,
                       PolyFamily::Quadratic}) {
    if (to_string(f) == name) return f;
  }
  throw DomainError("unknown polynomial family: " + std::string(name));
}

}  // namespace blaschke
