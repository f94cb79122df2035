#include "blaschke/render.hpp"

#include <algorithm>
#include <cmath>

#include "blaschke/parallel.hpp"

namespace blaschke {

namespace {

constexpr double kBasinTolerance = 1e-6;

template <class T, class F>
Image paint(const Grid<T>& grid, F color) {
  Image img;
  img.width = grid.width;
  img.height = grid.height;
  img.pixels.reserve(grid.cells.size());
  for (const T& cell : grid.cells) img.pixels.push_back(color(cell));
  return img;
}

}  // namespace

Rgb param_color(const GridRow& row) {
  // For 1 < |a| < 2 both critical points live on the invariant circle, so
  // every cycle they find is a circle cycle; beyond |a| = 2 only tongue
  // parameters have one.
  const bool circle_cycle = row.label == ParamLabel::TongueAdjacent || std::abs(row.a) < 2.0;
  switch (row.label) {
    case ParamLabel::DiskEscape:
    case ParamLabel::EscapingImmediate:
      return palette::kRed;
    case ParamLabel::EscapingDelayed:
      return row.escape == EscapeTarget::Zero ? palette::kBlack : palette::kRed;
    case ParamLabel::TongueAdjacent:
    case ParamLabel::Bitransitive:
    case ParamLabel::Capture:
    case ParamLabel::Disjoint:
    case ParamLabel::SwappingBitransitive:
    case ParamLabel::SwappingDisjoint:
      return circle_cycle ? palette::kGreen : palette::kPink;
    case ParamLabel::Degenerate:
    case ParamLabel::NonHyperbolicCircle:
    case ParamLabel::Undecided:
      return palette::kBlue;
  }
  return palette::kBlue;
}

Rgb escape_red(int iterations) {
  const int shade = std::max(90, 255 - 5 * std::max(0, iterations));
  return {static_cast<std::uint8_t>(shade), 0, 0};
}

Grid<DynPixel> dyn_plane_grid(Complex a, const PlaneSpec& window, int threads) {
  window.validate();
  const ParamClassRecord rec = classify_parameter(a, window.orbit);
  const BlaschkeParam p(a);
  auto attracting = [](const std::optional<CycleRecord>& c) { return c && c->attracting(); };
  const bool has_plus = attracting(rec.cycle_plus);
  const bool has_minus = attracting(rec.cycle_minus);

  Grid<DynPixel> grid;
  grid.width = window.nx;
  grid.height = window.ny;
  grid.cells.resize(static_cast<std::size_t>(window.nx) * static_cast<std::size_t>(window.ny));
  parallel_rows(window.ny, threads, [&](int iy) {
    for (int ix = 0; ix < window.nx; ++ix) {
      DynPixel& px = grid.at(ix, iy);
      const Fate f = classify_fate(p, window.pixel_center(ix, iy), window.orbit);
      px.tag = f.tag;
      px.iterations = f.iterations_used;
      if (f.tag != FateTag::Cycle || !f.cycle->attracting()) continue;
      if (has_plus && same_cycle(*f.cycle, *rec.cycle_plus, kBasinTolerance)) {
        px.basin = Basin::Plus;
      } else if (has_minus && same_cycle(*f.cycle, *rec.cycle_minus, kBasinTolerance)) {
        px.basin = Basin::Minus;
      }
    }
  });
  return grid;
}

Rgb dyn_color(const DynPixel& px) {
  switch (px.tag) {
    case FateTag::EscapeInf: return escape_red(px.iterations);
    case FateTag::EscapeZero: return palette::kBlack;
    case FateTag::Cycle:
    case FateTag::Undecided:
      break;
  }
  switch (px.basin) {
    case Basin::Plus: return palette::kGreen;
    case Basin::Minus: return palette::kYellow;
    case Basin::None: return palette::kBlue;
  }
  return palette::kBlue;
}

Rgb poly_color(const PolyPixel& px) {
  switch (px.tag) {
    case FateTag::EscapeInf: return escape_red(px.iterations);
    case FateTag::EscapeZero: return palette::kBlack;
    case FateTag::Cycle:
      if (px.zero_cycle) return palette::kBlack;
      return std::abs(px.multiplier) < 1.0 ? palette::kGreen : palette::kBlue;
    case FateTag::Undecided: return palette::kBlue;
  }
  return palette::kBlue;
}

Image render_image(const RowGrid& grid) { return paint(grid, param_color); }
Image render_image(const Grid<DynPixel>& grid) { return paint(grid, dyn_color); }
Image render_image(const Grid<PolyPixel>& grid) { return paint(grid, poly_color); }

std::string to_ppm(const Image& image) {
  std::string out = "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  const std::size_t header = out.size();
  out.resize(header + 3 * image.pixels.size());
  std::size_t i = header;
  for (const Rgb& px : image.pixels) {
    out[i++] = static_cast<char>(px.r);
    out[i++] = static_cast<char>(px.g);
    out[i++] = static_cast<char>(px.b);
  }
  return out;
}

}  // namespace blaschke
