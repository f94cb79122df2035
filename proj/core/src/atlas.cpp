#include "blaschke/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "blaschke/errors.hpp"
#include "blaschke/parallel.hpp"

namespace blaschke {

namespace {

// Two cycles count as one when they share a point to this relative accuracy.
constexpr double kSameCycleTolerance = 1e-6;
// An orbit has settled on a cycle once it is this close to one of its points.
constexpr double kSettledTolerance = 1e-6;

bool attracting(const Fate& f) { return f.tag == FateTag::Cycle && f.cycle->attracting(); }

struct PhaseReport {
  bool same_phase = false;
  int lag_plus = 0;
  int lag_minus = 0;
};

int nearest_point(const std::vector<Complex>& pts, Complex z, double* distance) {
  int best = 0;
  double best_d = std::abs(z - pts[0]);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double d = std::abs(z - pts[i]);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(i);
    }
  }
  *distance = best_d;
  return best;
}

// Runs both circle orbits in lockstep and compares which cycle point each one
// shadows at the same time.
PhaseReport compare_phases(const BlaschkeParam& p, const CriticalData& crit, const CycleRecord& cycle,
                           int steps) {
  PhaseReport out;
  out.lag_plus = -1;
  out.lag_minus = -1;
  Complex zp = crit.c_plus;
  Complex zm = crit.c_minus;
  int ip = 0;
  int im = 0;
  for (int n = 0; n <= steps; ++n) {
    double dp = 0.0;
    double dm = 0.0;
    ip = nearest_point(cycle.points, zp, &dp);
    im = nearest_point(cycle.points, zm, &dm);
    if (out.lag_plus < 0 && dp < kSettledTolerance) out.lag_plus = n;
    if (out.lag_minus < 0 && dm < kSettledTolerance) out.lag_minus = n;
    if (n == steps) break;
    const ExtComplex np = eval(p, zp);
    const ExtComplex nm = eval(p, zm);
    if (np.is_infinite() || nm.is_infinite()) break;
    zp = np.value() / std::abs(np.value());
    zm = nm.value() / std::abs(nm.value());
  }
  out.same_phase = ip == im;
  if (out.lag_plus < 0) out.lag_plus = steps;
  if (out.lag_minus < 0) out.lag_minus = steps;
  return out;
}

void classify_circle_regime(const BlaschkeParam& p, const OrbitSpec& spec, ParamClassRecord& rec) {
  const CriticalData crit = critical_points(p);
  const Fate plus = classify_fate(p, crit.c_plus, spec);
  const Fate minus = classify_fate(p, crit.c_minus, spec);
  rec.iterations = plus.iterations_used;
  rec.entered_disk = plus.entered_disk;
  rec.cycle_plus = plus.cycle;
  rec.cycle_minus = minus.cycle;

  const bool plus_attr = attracting(plus);
  const bool minus_attr = attracting(minus);
  if (!plus_attr && !minus_attr) {
    rec.label = ParamLabel::NonHyperbolicCircle;
    return;
  }
  if (plus_attr != minus_attr) {
    // One critical orbit settled, the other did not within the budget.
    rec.label = ParamLabel::Undecided;
    return;
  }
  if (!same_cycle(*plus.cycle, *minus.cycle, kSameCycleTolerance)) {
    rec.label = ParamLabel::Disjoint;
    return;
  }
  const int period = plus.cycle->period;
  const int steps = std::max(plus.iterations_used, minus.iterations_used) + 2 * period;
  const PhaseReport phase = compare_phases(p, crit, *plus.cycle, steps);
  // A late orbit has wandered over the expanding part of the circle first; its
  // landing phase is then below double-precision resolution, so it is put in
  // the adjacent-or-capture bucket whatever phase it happened to reach.
  rec.capture_suspect = std::abs(phase.lag_plus - phase.lag_minus) > 3 * period;
  if (phase.same_phase || rec.capture_suspect) {
    rec.label = ParamLabel::TongueAdjacent;
  } else {
    rec.label = ParamLabel::Bitransitive;
  }
}

void classify_exterior_regime(const BlaschkeParam& p, const OrbitSpec& spec, ParamClassRecord& rec) {
  const CriticalData crit = critical_points(p);
  const Fate plus = classify_fate(p, crit.c_plus, spec);
  rec.iterations = plus.iterations_used;
  rec.entered_disk = plus.entered_disk;
  rec.swapping = p.modulus() > 2.0 && plus.entered_disk >= 1;

  switch (plus.tag) {
    case FateTag::EscapeInf:
      rec.escape = EscapeTarget::Infinity;
      rec.label = plus.entered_disk == 0 ? ParamLabel::EscapingImmediate : ParamLabel::EscapingDelayed;
      return;
    case FateTag::EscapeZero:
      rec.escape = EscapeTarget::Zero;
      rec.label = ParamLabel::EscapingDelayed;
      return;
    case FateTag::Undecided:
      rec.label = ParamLabel::Undecided;
      return;
    case FateTag::Cycle:
      break;
  }

  rec.cycle_plus = plus.cycle;
  if (!plus.cycle->attracting()) {
    rec.label = ParamLabel::Undecided;
    return;
  }
  rec.cycle_minus = reflect_cycle(p, *plus.cycle, spec);
  const CycleRecord& cycle = *plus.cycle;
  if (cycle.on_circle) {
    rec.label = ParamLabel::TongueAdjacent;
  } else if (cycle.self_symmetric) {
    rec.label = rec.swapping ? ParamLabel::SwappingBitransitive : ParamLabel::Bitransitive;
  } else {
    rec.label = rec.swapping ? ParamLabel::SwappingDisjoint : ParamLabel::Disjoint;
  }
}

}  // namespace

ParamClassRecord classify_parameter(Complex a, const OrbitSpec& spec) {
  spec.validate();
  const BlaschkeParam p(a);
  ParamClassRecord rec;
  rec.a = a;
  switch (p.regime()) {
    case Regime::Disk:
      rec.label = ParamLabel::DiskEscape;
      rec.escape = EscapeTarget::Infinity;
      break;
    case Regime::Degenerate:
      rec.label = ParamLabel::Degenerate;
      break;
    case Regime::Circle:
      classify_circle_regime(p, spec, rec);
      break;
    case Regime::Exterior:
      classify_exterior_regime(p, spec, rec);
      break;
  }
  rec.connectivity = connectivity_verdict(rec);
  return rec;
}

Connectivity connectivity_verdict(const ParamClassRecord& record) {
  const Regime regime = BlaschkeParam(record.a).regime();
  if (regime == Regime::Disk) return Connectivity::CircleJulia;
  if (regime != Regime::Exterior) return Connectivity::Unknown;
  switch (record.label) {
    case ParamLabel::EscapingImmediate:
      return Connectivity::Disconnected;
    case ParamLabel::EscapingDelayed:
    case ParamLabel::TongueAdjacent:
    case ParamLabel::Bitransitive:
    case ParamLabel::Capture:
    case ParamLabel::Disjoint:
    case ParamLabel::SwappingBitransitive:
    case ParamLabel::SwappingDisjoint:
      return Connectivity::Connected;
    case ParamLabel::DiskEscape:
    case ParamLabel::Degenerate:
    case ParamLabel::NonHyperbolicCircle:
    case ParamLabel::Undecided:
      return Connectivity::Unknown;
  }
  return Connectivity::Unknown;
}

void PlaneSpec::validate() const {
  if (!(width > 0.0) || !(height > 0.0)) throw DomainError("PlaneSpec: extents must be positive");
  if (nx <= 0 || ny <= 0) throw DomainError("PlaneSpec: resolution must be positive");
  orbit.validate();
}

Complex PlaneSpec::pixel_center(int ix, int iy) const {
  const double re = center.real() - 0.5 * width + (ix + 0.5) * width / nx;
  const double im = center.imag() + 0.5 * height - (iy + 0.5) * height / ny;
  return {re, im};
}

PlaneSpec PlaneSpec::from_bounds(double re_min, double re_max, double im_min, double im_max, int nx,
                                 int ny, OrbitSpec orbit) {
  PlaneSpec s;
  s.center = {0.5 * (re_min + re_max), 0.5 * (im_min + im_max)};
  s.width = re_max - re_min;
  s.height = im_max - im_min;
  s.nx = nx;
  s.ny = ny;
  s.orbit = orbit;
  s.validate();
  return s;
}

ClassGrid param_plane_grid(const PlaneSpec& window, int threads) {
  window.validate();
  ClassGrid grid;
  grid.width = window.nx;
  grid.height = window.ny;
  grid.cells.resize(static_cast<std::size_t>(window.nx) * static_cast<std::size_t>(window.ny));
  parallel_rows(window.ny, threads, [&](int iy) {
    for (int ix = 0; ix < window.nx; ++ix) {
      grid.at(ix, iy) = classify_parameter(window.pixel_center(ix, iy), window.orbit);
    }
  });
  return grid;
}

std::string_view to_string(ParamLabel label) {
  switch (label) {
    case ParamLabel::DiskEscape: return "disk-escape";
    case ParamLabel::Degenerate: return "degenerate";
    case ParamLabel::NonHyperbolicCircle: return "non-hyperbolic-circle";
    case ParamLabel::TongueAdjacent: return "tongue-adjacent";
    case ParamLabel::Bitransitive: return "bitransitive";
    case ParamLabel::Capture: return "capture";
    case ParamLabel::Disjoint: return "disjoint";
    case ParamLabel::EscapingImmediate: return "escaping-immediate";
    case ParamLabel::EscapingDelayed: return "escaping-delayed";
    case ParamLabel::SwappingBitransitive: return "swapping-bitransitive";
    case ParamLabel::SwappingDisjoint: return "swapping-disjoint";
    case ParamLabel::Undecided: return "undecided";
  }
  return "undecided";
}

std::string_view to_string(Connectivity c) {
  switch (c) {
    case Connectivity::CircleJulia: return "circle-julia";
    case Connectivity::Connected: return "connected";
    case Connectivity::Disconnected: return "disconnected";
    case Connectivity::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(EscapeTarget e) {
  switch (e) {
    case EscapeTarget::None: return "none";
    case EscapeTarget::Zero: return "zero";
    case EscapeTarget::Infinity: return "infinity";
  }
  return "none";
}

ParamLabel parse_label(std::string_view name) {
  for (ParamLabel l : kAllLabels) {
    if (to_string(l) == name) return l;
  }
  throw DomainError("unknown label: " + std::string(name));
}

Connectivity parse_connectivity(std::string_view name) {
  for (Connectivity c : {Connectivity::CircleJulia, Connectivity::Connected, Connectivity::Disconnected,
                         Connectivity::Unknown}) {
    if (to_string(c) == name) return c;
  }
  throw DomainError("unknown connectivity: " + std::string(name));
}

EscapeTarget parse_escape(std::string_view name) {
  for (EscapeTarget e : {EscapeTarget::None, EscapeTarget::Zero, EscapeTarget::Infinity}) {
    if (to_string(e) == name) return e;
  }
  throw DomainError("unknown escape target: " + std::string(name));
}

}  // namespace blaschke
