#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "blaschke/render.hpp"

using namespace blaschke;

namespace {

bool is_red(Rgb c) { return c.g == 0 && c.b == 0 && c.r >= 90; }

std::set<std::tuple<int, int, int>> colors(const Image& img) {
  std::set<std::tuple<int, int, int>> out;
  for (Rgb c : img.pixels) out.emplace(c.r, c.g, c.b);
  return out;
}

}  // namespace

TEST(Palette, UndecidedGridIsSolidBlue) {
  RowGrid g;
  g.width = 3;
  g.height = 2;
  g.cells.assign(6, GridRow{});
  const Image img = render_image(g);
  for (Rgb c : img.pixels) EXPECT_EQ(c, palette::kBlue);
}

TEST(Palette, EveryLabelHasAColor) {
  for (ParamLabel l : kAllLabels) {
    for (double r : {0.5, 1.5, 3.0}) {
      GridRow row;
      row.a = r;
      row.label = l;
      const Rgb c = param_color(row);
      const bool known = c == palette::kRed || c == palette::kBlack || c == palette::kGreen ||
                         c == palette::kPink || c == palette::kBlue;
      EXPECT_TRUE(known) << to_string(l);
    }
  }
  GridRow zero;
  zero.a = 3.0;
  zero.label = ParamLabel::EscapingDelayed;
  zero.escape = EscapeTarget::Zero;
  EXPECT_EQ(param_color(zero), palette::kBlack);
  zero.escape = EscapeTarget::Infinity;
  EXPECT_EQ(param_color(zero), palette::kRed);
}

TEST(Palette, EscapeShadingIsMonotone) {
  for (int i = 0; i < 100; ++i) {
    EXPECT_GE(escape_red(i).r, escape_red(i + 1).r);
    EXPECT_TRUE(is_red(escape_red(i)));
  }
}

TEST(Ppm, HeaderAndSize) {
  Image img;
  img.width = 7;
  img.height = 3;
  img.pixels.assign(21, palette::kYellow);
  const std::string ppm = to_ppm(img);
  const std::string header = "P6\n7 3\n255\n";
  ASSERT_EQ(ppm.size(), header.size() + 63);
  EXPECT_EQ(ppm.substr(0, header.size()), header);
  EXPECT_EQ(static_cast<unsigned char>(ppm[header.size()]), palette::kYellow.r);
  EXPECT_EQ(static_cast<unsigned char>(ppm.back()), palette::kYellow.b);
}

TEST(DynPlane, FourBasinsAtFour) {
  // Superattracting fixed points at both critical points, plus A(0) and A(inf).
  const auto g = dyn_plane_grid(4.0, PlaneSpec::from_bounds(-4, 4, -4, 4, 120, 120), 2);
  const Image img = render_image(g);
  bool red = false, black = false, green = false, yellow = false;
  for (Rgb c : img.pixels) {
    red |= is_red(c);
    black |= c == palette::kBlack;
    green |= c == palette::kGreen;
    yellow |= c == palette::kYellow;
  }
  EXPECT_TRUE(red && black && green && yellow);
}

TEST(ParamPlane, ZoomedTricornWindowIsNotAllEscaping) {
  const RowGrid g = summarize(param_plane_grid(PlaneSpec::from_bounds(-3.22295, -3.22249, 5.58172, 5.58218, 60, 60), 1));
  const Image img = render_image(g);
  int black = 0, other = 0;
  for (Rgb c : img.pixels) {
    if (c == palette::kBlack) ++black;
    else if (!is_red(c)) ++other;
  }
  EXPECT_GT(black, 0);
  EXPECT_GT(other, 0);
}

TEST(Render, ThreadCountDoesNotChangePixels) {
  const PlaneSpec w = PlaneSpec::from_bounds(-1.5, 3.5, -2.5, 2.5, 50, 50);
  const std::string one = to_ppm(render_image(dyn_plane_grid({2.6, 0.4}, w, 1)));
  EXPECT_EQ(one, to_ppm(render_image(dyn_plane_grid({2.6, 0.4}, w, 4))));
  const PlaneSpec b = PlaneSpec::from_bounds(-2, 1, -1.5, 1.5, 40, 40);
  EXPECT_EQ(to_ppm(render_image(poly_plane_grid(PolyFamily::AntiquadraticP, b, 1))),
            to_ppm(render_image(poly_plane_grid(PolyFamily::AntiquadraticP, b, 3))));
  const auto quad = colors(render_image(poly_plane_grid(PolyFamily::Quadratic, b, 1)));
  EXPECT_EQ(quad.count({palette::kGreen.r, palette::kGreen.g, palette::kGreen.b}), 1u);
}
