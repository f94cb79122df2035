#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "blaschke/atlas.hpp"
#include "blaschke/errors.hpp"
#include "blaschke/records.hpp"
#include "support.hpp"

using namespace blaschke;
using testing_support::Gen;

TEST(ClassifyParameter, Examples) {
  EXPECT_EQ(classify_parameter(0.5).label, ParamLabel::DiskEscape);
  EXPECT_EQ(classify_parameter(std::polar(1.0, 0.4)).label, ParamLabel::Degenerate);
  EXPECT_EQ(classify_parameter(1.5).label, ParamLabel::Bitransitive);
  EXPECT_EQ(classify_parameter({0.0, 1.5}).label, ParamLabel::NonHyperbolicCircle);
  EXPECT_EQ(classify_parameter(2.5).label, ParamLabel::TongueAdjacent);
  EXPECT_EQ(classify_parameter(5.25).label, ParamLabel::Disjoint);
  EXPECT_EQ(classify_parameter(4.0).label, ParamLabel::Disjoint);
  EXPECT_EQ(classify_parameter({-0.87, 2.05333}).label, ParamLabel::EscapingImmediate);
  EXPECT_EQ(classify_parameter({-3.22271, 5.58189}).label, ParamLabel::SwappingBitransitive);
  EXPECT_EQ(classify_parameter({-3.22278, 5.58202}).label, ParamLabel::SwappingDisjoint);

  const ParamClassRecord d = classify_parameter({1.07398, 0.5579});
  EXPECT_EQ(d.label, ParamLabel::Disjoint);
  ASSERT_TRUE(d.cycle_plus && d.cycle_minus);
  EXPECT_EQ(d.cycle_plus->period + d.cycle_minus->period, 5);
}

TEST(ClassifyParameter, Connectivity) {
  EXPECT_EQ(classify_parameter(0.5).connectivity, Connectivity::CircleJulia);
  EXPECT_EQ(classify_parameter({-0.87, 2.05333}).connectivity, Connectivity::Disconnected);
  EXPECT_EQ(classify_parameter(4.0).connectivity, Connectivity::Connected);
  EXPECT_EQ(classify_parameter(1.5).connectivity, Connectivity::Unknown);
}

TEST(ClassifyParameter, ConjugationSymmetry) {
  Gen g(31);
  const Complex xi = cube_root_of_unity();
  for (int i = 0; i < 1000; ++i) {
    const Complex a = g.parameter(0.0, 8.0);
    const ParamClassRecord r = classify_parameter(a, OrbitSpec::grid());
    const ParamClassRecord rr = classify_parameter(xi * a, OrbitSpec::grid());
    const ParamClassRecord rc = classify_parameter(std::conj(a), OrbitSpec::grid());
    EXPECT_EQ(r.label, rr.label) << a;
    EXPECT_EQ(r.label, rc.label) << a;
    if (r.cycle_plus && rc.cycle_plus && r.cycle_plus->attracting()) {
      EXPECT_LT(std::abs(rc.cycle_plus->multiplier - std::conj(r.cycle_plus->multiplier)), 1e-8) << a;
    }
  }
}

TEST(ClassifyParameter, RecordInvariants) {
  Gen g(32);
  int disjoint = 0;
  int swapping = 0;
  for (int i = 0; i < 1500; ++i) {
    const Complex a = i % 3 == 0   ? Complex{-3.222712654, 5.58190824} + g.box(1e-6)
                      : i % 3 == 1 ? Complex{-3.222644693, 5.581858574} + g.box(2e-6)
                                   : Complex{g.uniform(2.0, 6.0), g.uniform(-0.02, 0.02)};
    const ParamClassRecord r = classify_parameter(a, OrbitSpec::grid());
    EXPECT_FALSE(r.label == ParamLabel::EscapingImmediate && r.connectivity == Connectivity::Connected);
    if (r.label == ParamLabel::TongueAdjacent) EXPECT_FALSE(r.swapping) << a;
    if (r.label == ParamLabel::Disjoint && std::abs(a) > 2.0) {
      ++disjoint;
      EXPECT_LT(std::abs(r.cycle_minus->multiplier - std::conj(r.cycle_plus->multiplier)), 1e-8) << a;
    }
    if (r.label == ParamLabel::SwappingBitransitive || r.label == ParamLabel::SwappingDisjoint) {
      ++swapping;
      EXPECT_GE(r.cycle_plus->period, 3) << a;
    }
    if (r.label == ParamLabel::SwappingBitransitive) {
      EXPECT_EQ(r.cycle_plus->period % 2, 0) << a;
      EXPECT_LT(std::abs(r.cycle_plus->multiplier.imag()), 1e-6) << a;
      EXPECT_GE(r.cycle_plus->multiplier.real(), -1e-9) << a;
    }
  }
  EXPECT_GT(disjoint, 50);
  EXPECT_GT(swapping, 20);
}

TEST(ClassifyParameter, CaptureSuspectOnlyInCircleRegime) {
  Gen g(33);
  for (int i = 0; i < 300; ++i) {
    const Complex a = g.parameter(1.0, 2.0);
    const ParamClassRecord r = classify_parameter(a, OrbitSpec::grid());
    if (r.capture_suspect) EXPECT_EQ(r.label, ParamLabel::TongueAdjacent) << a;
    EXPECT_NE(r.label, ParamLabel::Capture);
  }
  EXPECT_FALSE(classify_parameter(1.5).capture_suspect);
}

TEST(PlaneSpec, PixelCentres) {
  const PlaneSpec w = PlaneSpec::from_bounds(-8, 8, -8, 8, 200, 200);
  EXPECT_NEAR(std::abs(w.pixel_center(0, 0) - Complex{-7.96, 7.96}), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(w.pixel_center(199, 199) - Complex{7.96, -7.96}), 0.0, 1e-12);
  PlaneSpec bad;
  bad.nx = 0;
  EXPECT_THROW(bad.validate(), DomainError);
}

TEST(ParamPlaneGrid, TonguePixel) {
  const PlaneSpec w = PlaneSpec::from_bounds(-8, 8, -8, 8, 200, 200);
  const Complex a = w.pixel_center(131, 100);
  EXPECT_NEAR(std::abs(a - Complex{2.52, -0.04}), 0.0, 1e-12);
  EXPECT_EQ(classify_parameter(a, w.orbit).label, ParamLabel::TongueAdjacent);
}

TEST(ParamPlaneGrid, ThreadIndependence) {
  const PlaneSpec small = PlaneSpec::from_bounds(-3.22295, -3.22249, 5.58172, 5.58218, 40, 40);
  const ClassGrid one = param_plane_grid(small, 1);
  EXPECT_EQ(one.width, 40);
  EXPECT_EQ(one.cells.size(), 1600u);
  std::ostringstream a;
  write_csv(a, summarize(one));
  for (int threads : {2, 3, 8}) {
    std::ostringstream b;
    write_csv(b, summarize(param_plane_grid(small, threads)));
    EXPECT_EQ(a.str(), b.str()) << threads;
  }
}

TEST(Labels, StringRoundTrip) {
  for (ParamLabel l : kAllLabels) EXPECT_EQ(parse_label(to_string(l)), l);
  EXPECT_THROW(parse_label("tongue"), DomainError);
  EXPECT_EQ(parse_connectivity("circle-julia"), Connectivity::CircleJulia);
  EXPECT_EQ(parse_escape("zero"), EscapeTarget::Zero);
}
