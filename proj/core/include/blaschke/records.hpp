#pragma once

// Flat grid records and their CSV/JSON forms. CSV columns:
//   a_re,a_im,label,period,mult_re,mult_im,swapping,connectivity,iters,escape
// with a trailing `family` column for the polynomial planes. Doubles are
// written in shortest round-trip form, so reading a file back reproduces the
// rows bit for bit.

#include <iosfwd>
#include <string>
#include <string_view>

#include "blaschke/atlas.hpp"
#include "blaschke/multiplier.hpp"
#include "blaschke/orbit.hpp"
#include "blaschke/polys.hpp"

namespace blaschke {

struct GridRow {
  Complex a{};
  ParamLabel label = ParamLabel::Undecided;
  int period = 0;  // period of the c_plus cycle, 0 if none
  Complex multiplier{};
  bool swapping = false;
  Connectivity connectivity = Connectivity::Unknown;
  int iterations = 0;
  EscapeTarget escape = EscapeTarget::None;

  bool operator==(const GridRow&) const = default;
};

using RowGrid = Grid<GridRow>;

GridRow summarize(const ParamClassRecord& record);
RowGrid summarize(const ClassGrid& grid);

void write_csv(std::ostream& os, const RowGrid& grid);
void write_csv(std::ostream& os, const Grid<PolyPixel>& grid, PolyFamily family);
/// Width is the length of the first run of rows sharing a_im. Throws
/// IoError on malformed input.
RowGrid read_param_csv(std::istream& is);
Grid<PolyPixel> read_poly_csv(std::istream& is, PolyFamily* family = nullptr);

std::string to_json(const ParamClassRecord& record);
ParamClassRecord record_from_json(std::string_view text);
std::string to_json(const Fate& fate);
std::string to_json(const SolveReport& report);
std::string to_json(const CubicMatch& match);

/// Whole-file helpers; failures raise IoError naming the path.
void write_file(const std::string& path, std::string_view bytes);
std::string read_file(const std::string& path);

FateTag parse_fate_tag(std::string_view name);

}  // namespace blaschke
