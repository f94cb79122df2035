#pragma once

// The restriction of B_a to the unit circle for |a| >= 2, where it is a
// positively oriented degree 2 cover, read through its lift F : R -> R with
// F(x + 1) = F(x) + 2, and the semiconjugacy H = lim F^n / 2^n to doubling.

#include <iosfwd>
#include <vector>

#include "blaschke/family.hpp"
#include "blaschke/orbit.hpp"

namespace blaschke {

/// F sampled at x_k = k / grid_size, k = 0..grid_size, with F(0) in [0, 1).
class LiftTable {
 public:
  LiftTable(BlaschkeParam param, std::vector<double> values);

  const BlaschkeParam& param() const noexcept { return param_; }
  int grid_size() const noexcept { return static_cast<int>(values_.size()) - 1; }
  const std::vector<double>& values() const noexcept { return values_; }
  double base_anchor() const noexcept { return values_.front(); }

  /// Piecewise-linear F(x) for any real x.
  double interpolate(double x) const;

  /// F(x) from the angle of B_a(e^{2 pi i x}); the table only picks the branch.
  double exact(double x) const;

 private:
  BlaschkeParam param_;
  std::vector<double> values_;
};

/// Throws DomainError below |a| = 2 or for grid_size < 256, and NumericError
/// if the unwrapped table is not a monotone degree 2 lift.
LiftTable build_lift(const BlaschkeParam& p, int grid_size = 1024);

struct SemiconjugacySample {
  int depth = 0;
  std::vector<double> x;  // grid on [0, 1], endpoints included
  std::vector<double> h;  // H_depth(x), shifted so that h[0] is in [0, 1)
  double defect = 0.0;    // max |H(F(x)) - 2 H(x)| mod 1 over the grid
  bool monotone = true;   // h nondecreasing up to 1e-12
  double periodicity_error = 0.0;  // |H(1) - H(0) - 1|
};

/// H_depth = F^depth / 2^depth on `grid_points + 1` points of [0, 1].
/// F is re-evaluated exactly at every step. depth must be in [1, 50].
SemiconjugacySample semiconjugacy(const BlaschkeParam& p, const LiftTable& lift, int depth,
                                  int grid_points = 1024);

/// H_depth at a single point, without the H(0) normalization shift.
double semiconjugacy_at(const LiftTable& lift, double x, int depth);

struct TongueResult {
  bool in_tongue = false;
  bool undecided = false;  // the c_plus orbit exhausted its budget

  explicit operator bool() const noexcept { return in_tongue; }
};

/// Whether B_a restricted to the circle has an attracting cycle, decided from
/// the c_plus orbit. Requires |a| >= 2.
TongueResult tongue_membership(const BlaschkeParam& p, const OrbitSpec& spec);

/// CSV rows x,F,H for every sample point.
void write_lift_csv(std::ostream& out, const LiftTable& lift, const SemiconjugacySample& sample);

}  // namespace blaschke
