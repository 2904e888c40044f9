#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <escapelab/simulate.hpp>
#include <escapelab/spectral.hpp>

using namespace escapelab;

namespace {

SimConfig config(std::uint64_t samples, std::size_t horizon, std::uint64_t seed = 7) {
  SimConfig c;
  c.samples = samples;
  c.horizon = horizon;
  c.seed = seed;
  return c;
}

// Least n at which the arcs [start - k alpha, start - k alpha + length),
// k = 0..n, cover the circle: the largest escape time of any point.
std::size_t cover_time(double alpha, double start, double length) {
  std::vector<double> points;
  for (std::size_t n = 0;; ++n) {
    double p = start - static_cast<double>(n) * alpha;
    p -= std::floor(p);
    points.insert(std::upper_bound(points.begin(), points.end(), p), p);
    double widest = points.front() + 1 - points.back();
    for (std::size_t k = 1; k < points.size(); ++k) widest = std::max(widest, points[k] - points[k - 1]);
    if (widest <= length) return n;
  }
}

}  // namespace

TEST(Philox, KnownAnswerVectors) {
  using C = Philox4x32::Counter;
  EXPECT_EQ(Philox4x32(0)({0, 0, 0, 0}), (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32(~std::uint64_t{0})({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}),
            (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32(0x299f31d0a4093822)({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}),
            (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox, BlocksDifferAcrossStreams) {
  const Philox4x32 rng(1);
  EXPECT_NE(rng.block(0, 0), rng.block(1, 0));
  EXPECT_NE(rng.block(0, 0), rng.block(0, 1));
  EXPECT_EQ(rng.block(5, 9), Philox4x32(1).block(5, 9));
}

TEST(SurvivalMc, DeterministicForSeedAndWorkers) {
  const HoleSpec hole = MarkovCylinder{3, 1};
  SimConfig a = config(40000, 20), b = a;
  a.workers = 1;
  b.workers = 4;
  EXPECT_EQ(survival_mc(MapSpec::doubling(), hole, a).survivors, survival_mc(MapSpec::doubling(), hole, b).survivors);
  SimConfig c = a;
  c.seed = 8;
  EXPECT_NE(survival_mc(MapSpec::doubling(), hole, a).survivors, survival_mc(MapSpec::doubling(), hole, c).survivors);
}

TEST(SurvivalMc, DoublingMatchesExactSeries) {
  const auto est = survival_mc(MapSpec::doubling(), MarkovCylinder{1, 1}, config(200000, 5));
  ASSERT_EQ(est.horizon(), 5u);
  EXPECT_NEAR(est.s_hat[5], 1.0 / 64, 4 * std::sqrt(1.0 / 64 / 200000));
  EXPECT_TRUE(agrees_with(est, survival_series(PatternSet::parse("0"), 5)));
  EXPECT_EQ(est.s_hat.size(), 6u);
  EXPECT_EQ(est.ci_halfwidth.size(), 6u);
  EXPECT_TRUE(est.diagnostic.empty());
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_LE(est.survivors[n], est.survivors[n - 1]);

  const auto none = survival_mc(MapSpec::doubling(), MarkovCylinder{2, 3}, config(1000, 0));
  ASSERT_EQ(none.horizon(), 0u);
  EXPECT_TRUE(agrees_with(none, survival_series(PatternSet::parse("10"), 0)));
}

TEST(SurvivalMc, EveryMapAgreesWithItsCoding) {
  const std::size_t horizon = 24;
  const SimConfig cfg = config(100000, horizon);
  struct Case {
    MapSpec map;
    HoleSpec hole;
  };
  const Case cases[] = {
      {MapSpec::doubling(), parse_hole("interval:1/4:5/8")},
      {MapSpec::tent(), MarkovCylinder{3, 2}},
      {MapSpec::tent(), parse_hole("union:0:1/8,3/4:1")},
      {MapSpec::logistic(), MarkovCylinder{1, 1}},
      {MapSpec::logistic(), MarkovCylinder{4, 7}},
      {MapSpec::expanding(3), MarkovCylinder{2, 5}},
      {MapSpec::expanding(5), parse_hole("interval:1/5:3/5")},
      {MapSpec::baker(), BakerRect{2, 3, 3, 5}},
  };
  for (const auto& c : cases) {
    const auto est = survival_mc(c.map, c.hole, cfg);
    const SurvivalSeries exact = survival_series(code_hole(c.map, c.hole), horizon);
    EXPECT_TRUE(agrees_with(est, exact)) << c.map.str() << " " << to_string(c.hole);
  }
}

TEST(SurvivalMc, LogisticNonMarkovHoleRuns) {
  const auto est = survival_mc(MapSpec::logistic(), parse_hole("interval:0.3:0.4"), config(20000, 10));
  EXPECT_LT(est.s_hat[10], est.s_hat[0]);
  EXPECT_NEAR(est.s_hat[0], 1 - arcsine_measure(0.3, 0.4), 0.02);
}

TEST(SurvivalMc, PrecisionCapsHorizon) {
  SimConfig cfg = config(1000, 100);
  cfg.precision = 128;
  const auto est = survival_mc(MapSpec::doubling(), MarkovCylinder{2, 1}, cfg);
  EXPECT_EQ(est.horizon(), 64u);
  EXPECT_FALSE(est.diagnostic.empty());
  cfg.precision = 32;
  EXPECT_THROW(survival_mc(MapSpec::doubling(), MarkovCylinder{2, 1}, cfg), Error);
}

TEST(SurvivalMc, Errors) {
  EXPECT_THROW(survival_mc(MapSpec::doubling(), MarkovCylinder{1, 1}, config(0, 5)), Error);
  EXPECT_THROW(survival_mc(MapSpec::rotation(0.3), MarkovCylinder{1, 1}, config(10, 5)), Error);
  EXPECT_THROW(survival_mc(MapSpec::baker(), MarkovCylinder{1, 1}, config(10, 5)), Error);
}

TEST(Fit, RecoversRates) {
  EXPECT_DOUBLE_EQ(escape_rate_fit(std::vector<double>(10, 0.25), 0, 9), 0.0);
  std::vector<double> geometric;
  for (int n = 0; n < 30; ++n) geometric.push_back(0.9 * std::exp(-0.3 * n));
  EXPECT_NEAR(escape_rate_fit(geometric, 5, 29), 0.3, 1e-12);
  EXPECT_THROW(escape_rate_fit(geometric, 5, 5), Error);
  EXPECT_THROW(escape_rate_fit(geometric, 5, 30), Error);
  EXPECT_THROW(escape_rate_fit(std::vector<double>{1, 0.5, 0}, 0, 2), Error);

  const auto est = survival_mc(MapSpec::doubling(), MarkovCylinder{4, 1}, config(200000, 40));
  const double exact = escape_rate(PatternSet::parse("0000")).rho;
  EXPECT_NEAR(escape_rate_fit(est, 10, 40), exact, 0.05 * exact);
}

TEST(Rotation, WholeCircleHoleCatchesEverything) {
  const auto r = rotation_escape(0.3, 0, 1, 100, 10);
  EXPECT_TRUE(r.all_escaped());
  EXPECT_EQ(*r.max_time, 0u);
}

TEST(Rotation, MaxTimeIsTheCoverTime) {
  const double golden = (std::sqrt(5.0) - 1) / 2;
  for (double length : {0.3, 0.1, 0.05}) {
    const auto r = rotation_escape(golden, 0.2, length, 100000, 10000);
    ASSERT_TRUE(r.all_escaped());
    EXPECT_EQ(*r.max_time, cover_time(golden, 0.2, length)) << length;
  }
}

TEST(Rotation, ShiftInvariance) {
  const double golden = (std::sqrt(5.0) - 1) / 2;
  const auto base = rotation_escape(golden, 0.0, 0.01, 20000, 5000);
  for (double s : {0.1, 0.5, 0.9}) {
    const auto moved = rotation_escape(golden, s, 0.01, 20000, 5000, s);
    EXPECT_EQ(moved.times, base.times) << s;
  }
}

TEST(Rotation, RationalAngleCanMissTheHole) {
  const auto r = rotation_escape(0.5, 0.1, 0.2, 10, 100);
  EXPECT_FALSE(r.all_escaped());
  EXPECT_FALSE(r.max_time.has_value());
  EXPECT_EQ(r.times[0], 101u);
  EXPECT_THROW(rotation_escape(1.5, 0, 0.1, 10, 10), Error);
  EXPECT_THROW(rotation_escape(0.3, 0, 0, 10, 10), Error);
  EXPECT_THROW(rotation_escape(0.3, 0, 0.1, 0, 10), Error);
}
