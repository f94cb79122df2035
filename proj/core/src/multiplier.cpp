#include "blaschke/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "blaschke/atlas.hpp"
#include "blaschke/detail/newton2d.hpp"
#include "blaschke/errors.hpp"

namespace blaschke {

namespace {

// Largest change of the target multiplier per continuation stage.
constexpr double kStageLength = 0.05;
// Intermediate stages only need to land inside the component.
constexpr double kStageTolerance = 1e-10;
constexpr double kFinalTolerance = 1e-13;
constexpr double kCenterTolerance = 1e-10;

std::optional<Complex> cycle_multiplier_of(Complex a, int period, const OrbitSpec& spec) {
  if (!(std::abs(a) > 2.0)) return std::nullopt;
  const BlaschkeParam p(a);
  const Fate f = classify_fate(p, critical_points(p).c_plus, spec);
  if (f.tag != FateTag::Cycle || !f.cycle->attracting() || f.cycle->period != period) return std::nullopt;
  return f.cycle->multiplier;
}

std::optional<Complex> return_residual(Complex a, int period) {
  if (!(std::abs(a) > 2.0)) return std::nullopt;
  const BlaschkeParam p(a);
  const Complex c = critical_points(p).c_plus;
  Complex z = c;
  for (int i = 0; i < period; ++i) {
    const ExtComplex w = eval(p, z);
    if (w.is_infinite()) return std::nullopt;
    z = w.value();
  }
  return z - c;
}

void require_disjoint_seed(Complex a_seed, const OrbitSpec& spec) {
  if (!(std::abs(a_seed) > 2.0)) throw DomainError("seed must satisfy |a| > 2");
  const ParamClassRecord rec = classify_parameter(a_seed, spec);
  if (rec.label != ParamLabel::Disjoint && rec.label != ParamLabel::SwappingDisjoint) {
    throw DomainError("seed is not in a disjoint hyperbolic component (label " +
                      std::string(to_string(rec.label)) + ")");
  }
}

std::string describe(detail::NewtonStatus s) {
  switch (s) {
    case detail::NewtonStatus::Converged: return "converged";
    case detail::NewtonStatus::Stagnated: return "residual stagnated";
    case detail::NewtonStatus::IllConditioned: return "jacobian conditioning above limit";
    case detail::NewtonStatus::Invalid: return "cycle period changed";
    case detail::NewtonStatus::MaxSteps: return "newton step limit reached";
  }
  return "unknown";
}

void finish_report(SolveReport& r, int period) {
  r.residual = std::abs(r.achieved - r.target);
  if (auto g = return_residual(r.a_star, period)) r.orbit_residual = std::abs(*g);
}

}  // namespace

Complex multiplier_at(Complex a, const OrbitSpec& spec) {
  const ParamClassRecord rec = classify_parameter(a, spec);
  if (!rec.cycle_plus || !rec.cycle_plus->attracting()) throw DomainError("outside hyperbolic component");
  return rec.cycle_plus->multiplier;
}

SolveReport solve_multiplier(Complex a_seed, Complex target, const OrbitSpec& spec, const SolveOptions& opts) {
  spec.validate();
  if (!(std::abs(target) < 1.0)) throw DomainError("target multiplier must lie in the open unit disk");
  if (opts.max_homotopy_steps < 1) throw DomainError("max_homotopy_steps must be positive");
  require_disjoint_seed(a_seed, spec);

  const BlaschkeParam p(a_seed);
  const Fate seed_fate = classify_fate(p, critical_points(p).c_plus, spec);
  const int period = seed_fate.cycle->period;
  const Complex start = seed_fate.cycle->multiplier;

  SolveReport r;
  r.target = target;
  r.period = period;
  r.a_star = a_seed;
  r.achieved = start;
  if (std::abs(start - target) <= opts.tolerance) {
    r.converged = true;
    finish_report(r, period);
    return r;
  }

  auto lambda = [&](Complex a) { return cycle_multiplier_of(a, period, spec); };
  const int stages = std::clamp(static_cast<int>(std::ceil(std::abs(target - start) / kStageLength)), 1,
                                opts.max_homotopy_steps);
  detail::Newton2dOptions nopt;
  nopt.max_steps = opts.max_newton_steps;
  nopt.max_conditioning = opts.max_conditioning;

  Complex a = a_seed;
  for (int k = 1; k <= stages; ++k) {
    const Complex stage_target = k == stages ? target : start + (target - start) * (double(k) / stages);
    nopt.tolerance = k == stages ? kFinalTolerance : kStageTolerance;
    const detail::Newton2dResult res = detail::newton2d(lambda, a, stage_target, nopt);
    r.steps += res.steps;
    r.jacobian_conditioning = std::max(r.jacobian_conditioning, res.conditioning);
    a = res.x;
    r.a_star = res.x;
    r.achieved = res.value;
    const double accept = k == stages ? opts.tolerance : 1e-6;
    if (res.status != detail::NewtonStatus::Converged && !(res.residual < accept)) {
      r.failure = describe(res.status) + " at stage " + std::to_string(k) + " of " + std::to_string(stages);
      finish_report(r, period);
      return r;
    }
  }
  finish_report(r, period);
  r.converged = r.residual < opts.tolerance;
  if (!r.converged) r.failure = "residual above tolerance";
  return r;
}

SolveReport find_superattracting(Complex a_seed, int period, const OrbitSpec& spec, const SolveOptions& opts) {
  spec.validate();
  if (period < 1) throw DomainError("period must be positive");
  require_disjoint_seed(a_seed, spec);

  auto g = [&](Complex a) { return return_residual(a, period); };
  detail::Newton2dOptions nopt;
  nopt.max_steps = opts.max_newton_steps;
  nopt.max_conditioning = opts.max_conditioning;
  nopt.tolerance = 1e-14;

  detail::Newton2dResult res = detail::newton2d(g, a_seed, Complex{}, nopt);
  int steps = res.steps;
  if (!(res.residual < kCenterTolerance)) {
    // Far from the centre the return map is too nonlinear; approach it along
    // the multiplier homotopy first and polish from there.
    const SolveReport guide = solve_multiplier(a_seed, Complex{}, spec, opts);
    steps += guide.steps;
    if (guide.converged) {
      res = detail::newton2d(g, guide.a_star, Complex{}, nopt);
      steps += res.steps;
    }
  }

  SolveReport r;
  r.target = Complex{};
  r.period = period;
  r.a_star = res.x;
  r.steps = steps;
  r.jacobian_conditioning = res.conditioning;
  r.orbit_residual = res.residual;
  if (auto m = cycle_multiplier_of(res.x, period, spec)) {
    r.achieved = *m;
  } else {
    r.failure = "no attracting cycle of period " + std::to_string(period) + " at the solution";
  }
  r.residual = std::abs(r.achieved - r.target);
  r.converged = r.failure.empty() && res.residual < kCenterTolerance && r.residual < opts.tolerance;
  if (!r.converged && r.failure.empty()) r.failure = describe(res.status);
  return r;
}

}  // namespace blaschke
