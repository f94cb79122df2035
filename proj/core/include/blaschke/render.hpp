#pragma once

// Palettes and binary PPM output for parameter, dynamical and polynomial
// planes.

#include <cstdint>
#include <string>
#include <vector>

#include "blaschke/atlas.hpp"
#include "blaschke/polys.hpp"
#include "blaschke/records.hpp"

namespace blaschke {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  bool operator==(const Rgb&) const = default;
};

namespace palette {
inline constexpr Rgb kRed{220, 20, 20};
inline constexpr Rgb kBlack{0, 0, 0};
inline constexpr Rgb kGreen{30, 170, 60};
inline constexpr Rgb kPink{250, 140, 200};
inline constexpr Rgb kBlue{40, 70, 200};
inline constexpr Rgb kYellow{240, 220, 40};
}  // namespace palette

struct Image {
  int width = 0;
  int height = 0;
  std::vector<Rgb> pixels;  // row-major from the top-left

  Rgb at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

/// Red when c_plus escapes to infinity, black when it falls into 0, green
/// for a cycle on the unit circle, pink for any other cycle, blue otherwise.
Rgb param_color(const GridRow& row);

/// Red shaded by escape time, darker for slower escapes.
Rgb escape_red(int iterations);

enum class Basin { None, Plus, Minus };

struct DynPixel {
  FateTag tag = FateTag::Undecided;
  Basin basin = Basin::None;
  int iterations = 0;
};

/// Fates of the points of a z-window under B_a, each attracting cycle
/// matched against the cycles of the two free critical points.
Grid<DynPixel> dyn_plane_grid(Complex a, const PlaneSpec& window, int threads = 1);
Rgb dyn_color(const DynPixel& px);

/// Black for the superattracting point 0, green for any other attracting
/// cycle, escape_red for escaping parameters, blue otherwise.
Rgb poly_color(const PolyPixel& px);

Image render_image(const RowGrid& grid);
Image render_image(const Grid<DynPixel>& grid);
Image render_image(const Grid<PolyPixel>& grid);

/// Binary P6 with maxval 255.
std::string to_ppm(const Image& image);

}  // namespace blaschke
