#include "blaschke/circle.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>

#include "blaschke/errors.hpp"

namespace blaschke {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// arg(B_a(e^{2 pi i x})) / 2 pi in (-1/2, 1/2].
double circle_angle(const BlaschkeParam& p, double x) {
  const Complex z = std::polar(1.0, kTwoPi * x);
  const ExtComplex w = eval(p, z);
  if (w.is_infinite()) throw NumericError("lift: circle point mapped to infinity", 0.0);
  return std::arg(w.value()) / kTwoPi;
}

double nearest_branch(double angle, double guess) {
  return angle + std::round(guess - angle);
}

// F^n(x) / 2^n with the integer part tracked separately so that the
// fractional position keeps full precision.
double lifted_orbit_average(const LiftTable& lift, double x, int depth) {
  const double whole = std::floor(x);
  auto integer = static_cast<std::int64_t>(whole);
  double frac = x - whole;
  for (int n = 0; n < depth; ++n) {
    const double fx = lift.exact(frac);
    const double m = std::floor(fx);
    integer = 2 * integer + static_cast<std::int64_t>(m);
    frac = fx - m;
  }
  return std::ldexp(static_cast<double>(integer), -depth) + std::ldexp(frac, -depth);
}

std::string shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

LiftTable::LiftTable(BlaschkeParam param, std::vector<double> values)
    : param_(param), values_(std::move(values)) {
  if (values_.size() < 2) throw DomainError("LiftTable: need at least two samples");
}

double LiftTable::interpolate(double x) const {
  const double whole = std::floor(x);
  const double f = x - whole;
  const int n = grid_size();
  const double pos = f * n;
  auto i = static_cast<int>(std::floor(pos));
  if (i >= n) i = n - 1;
  const double t = pos - i;
  const double v = values_[static_cast<std::size_t>(i)] +
                   t * (values_[static_cast<std::size_t>(i) + 1] - values_[static_cast<std::size_t>(i)]);
  return v + 2.0 * whole;
}

double LiftTable::exact(double x) const {
  const double whole = std::floor(x);
  const double f = x - whole;
  return nearest_branch(circle_angle(param_, f), interpolate(f)) + 2.0 * whole;
}

LiftTable build_lift(const BlaschkeParam& p, int grid_size) {
  if (p.regime() != Regime::Exterior) throw DomainError("lift undefined below modulus 2");
  if (grid_size < 256) throw DomainError("lift: grid_size must be at least 256");

  std::vector<double> values(static_cast<std::size_t>(grid_size) + 1);
  double first = circle_angle(p, 0.0);
  first -= std::floor(first);
  values[0] = first;
  for (int k = 1; k <= grid_size; ++k) {
    const double prediction = k == 1 ? values[0] + 2.0 / grid_size
                                     : 2.0 * values[static_cast<std::size_t>(k) - 1] -
                                           values[static_cast<std::size_t>(k) - 2];
    const double x = static_cast<double>(k) / grid_size;
    values[static_cast<std::size_t>(k)] = nearest_branch(circle_angle(p, x), prediction);
  }

  const double winding = values.back() - values.front();
  if (std::abs(winding - 2.0) > 1e-9) {
    throw NumericError("lift: unwrapped winding is not 2; increase grid_size", std::abs(winding - 2.0));
  }
  values.back() = values.front() + 2.0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] < values[k - 1] - 1e-12) {
      throw NumericError("lift: table is not monotone; increase grid_size", values[k - 1] - values[k]);
    }
  }
  return LiftTable(p, std::move(values));
}

double semiconjugacy_at(const LiftTable& lift, double x, int depth) {
  if (depth < 1 || depth > 50) throw DomainError("semiconjugacy: depth must be in [1, 50]");
  return lifted_orbit_average(lift, x, depth);
}

SemiconjugacySample semiconjugacy(const BlaschkeParam& p, const LiftTable& lift, int depth,
                                  int grid_points) {
  if (p.a() != lift.param().a()) throw DomainError("semiconjugacy: lift built for another parameter");
  if (depth < 1 || depth > 50) throw DomainError("semiconjugacy: depth must be in [1, 50]");
  if (grid_points < 1) throw DomainError("semiconjugacy: grid_points must be positive");

  SemiconjugacySample out;
  out.depth = depth;
  const auto count = static_cast<std::size_t>(grid_points) + 1;
  out.x.resize(count);
  out.h.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.x[k] = static_cast<double>(k) / grid_points;
    out.h[k] = lifted_orbit_average(lift, out.x[k], depth);
  }

  const double shift = std::floor(out.h[0]);
  for (double& v : out.h) v -= shift;

  for (std::size_t k = 0; k < count; ++k) {
    const double image = lifted_orbit_average(lift, lift.exact(out.x[k]), depth) - shift;
    const double diff = image - 2.0 * out.h[k];
    out.defect = std::max(out.defect, std::abs(diff - std::round(diff)));
    if (k > 0 && out.h[k] < out.h[k - 1] - 1e-12) out.monotone = false;
  }
  out.periodicity_error = std::abs(out.h.back() - out.h.front() - 1.0);
  return out;
}

TongueResult tongue_membership(const BlaschkeParam& p, const OrbitSpec& spec) {
  if (p.regime() != Regime::Exterior) throw DomainError("tongue_membership: requires |a| >= 2");
  const CriticalData crit = critical_points(p);
  const Fate fate = classify_fate(p, crit.c_plus, spec);
  TongueResult out;
  out.undecided = fate.tag == FateTag::Undecided;
  out.in_tongue = fate.tag == FateTag::Cycle && fate.cycle->attracting() && fate.cycle->on_circle;
  return out;
}

void write_lift_csv(std::ostream& out, const LiftTable& lift, const SemiconjugacySample& sample) {
  out << "x,F,H\n";
  for (std::size_t k = 0; k < sample.x.size(); ++k) {
    out << shortest(sample.x[k]) << ',' << shortest(lift.exact(sample.x[k])) << ','
        << shortest(sample.h[k]) << '\n';
  }
}

}  // namespace blaschke
