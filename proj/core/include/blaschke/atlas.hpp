#pragma once

// Parameter-plane taxonomy of the family: hyperbolic class of each parameter,
// the swapping flag, the Julia-set connectivity verdict, and whole grids of
// these records over rectangular windows.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blaschke/family.hpp"
#include "blaschke/orbit.hpp"

namespace blaschke {

enum class ParamLabel {
  DiskEscape,
  Degenerate,
  NonHyperbolicCircle,
  TongueAdjacent,
  Bitransitive,
  Capture,
  Disjoint,
  EscapingImmediate,
  EscapingDelayed,
  SwappingBitransitive,
  SwappingDisjoint,
  Undecided,
};

inline constexpr ParamLabel kAllLabels[] = {
    ParamLabel::DiskEscape,        ParamLabel::Degenerate,        ParamLabel::NonHyperbolicCircle,
    ParamLabel::TongueAdjacent,    ParamLabel::Bitransitive,      ParamLabel::Capture,
    ParamLabel::Disjoint,          ParamLabel::EscapingImmediate, ParamLabel::EscapingDelayed,
    ParamLabel::SwappingBitransitive, ParamLabel::SwappingDisjoint, ParamLabel::Undecided,
};

enum class Connectivity { CircleJulia, Connected, Disconnected, Unknown };

/// Where the c_plus orbit went when the parameter is escaping.
enum class EscapeTarget { None, Zero, Infinity };

struct ParamClassRecord {
  Complex a{};
  ParamLabel label = ParamLabel::Undecided;
  std::optional<CycleRecord> cycle_plus;
  std::optional<CycleRecord> cycle_minus;
  bool swapping = false;
  Connectivity connectivity = Connectivity::Unknown;
  EscapeTarget escape = EscapeTarget::None;
  int iterations = 0;    // iterations spent on the c_plus orbit
  int entered_disk = 0;  // unit-disk entries of the c_plus orbit
  // Both circle orbits share a cycle point in phase but settled more than
  // three periods apart; the parameter may be a capture rather than adjacent.
  bool capture_suspect = false;
};

/// Decision tree over |a|: the disk and degenerate cases are closed form, for
/// 1 < |a| < 2 both circle orbits are followed, and for |a| >= 2 only c_plus is
/// iterated and c_minus is its mirror image.
ParamClassRecord classify_parameter(Complex a, const OrbitSpec& spec = {});

/// Julia-set connectivity from a classified record. c_plus in the immediate
/// basin of infinity is approximated by "escapes without ever entering the
/// closed unit disk".
Connectivity connectivity_verdict(const ParamClassRecord& record);

struct PlaneSpec {
  Complex center{};
  double width = 4.0;
  double height = 4.0;
  int nx = 256;
  int ny = 256;
  OrbitSpec orbit = OrbitSpec::grid();

  /// Throws DomainError unless extents and resolution are positive.
  void validate() const;

  /// Centre of pixel (ix, iy); row 0 is the top edge (largest imaginary part).
  Complex pixel_center(int ix, int iy) const;

  /// Window spanning (re_min, re_max) x (im_min, im_max).
  static PlaneSpec from_bounds(double re_min, double re_max, double im_min, double im_max,
                               int nx, int ny, OrbitSpec orbit = OrbitSpec::grid());
};

template <class T>
struct Grid {
  int width = 0;
  int height = 0;
  std::vector<T> cells;  // row-major, top row first

  const T& at(int ix, int iy) const {
    return cells[static_cast<std::size_t>(iy) * static_cast<std::size_t>(width) +
                 static_cast<std::size_t>(ix)];
  }
  T& at(int ix, int iy) {
    return cells[static_cast<std::size_t>(iy) * static_cast<std::size_t>(width) +
                 static_cast<std::size_t>(ix)];
  }
};

using ClassGrid = Grid<ParamClassRecord>;

/// One record per pixel centre. Identical output for every thread count.
ClassGrid param_plane_grid(const PlaneSpec& window, int threads = 1);

std::string_view to_string(ParamLabel label);
std::string_view to_string(Connectivity c);
std::string_view to_string(EscapeTarget e);
/// Inverse of to_string; throws DomainError on unknown names.
ParamLabel parse_label(std::string_view name);
Connectivity parse_connectivity(std::string_view name);
EscapeTarget parse_escape(std::string_view name);

}  // namespace blaschke
