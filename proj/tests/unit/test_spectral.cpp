#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <escapelab/maps.hpp>
#include <escapelab/spectral.hpp>

using namespace escapelab;

namespace {

const double kPhi = std::numbers::phi;
const double kLn2 = std::numbers::ln2;

double rho_of(const char* word) { return escape_rate(PatternSet::parse(word)).rho; }

}  // namespace

TEST(Theta, ClosedForms) {
  EXPECT_DOUBLE_EQ(theta_root(Word::parse("0")).theta, 1.0);
  EXPECT_NEAR(theta_root(Word::parse("00")).theta, kPhi, 1e-15);
  EXPECT_NEAR(theta_root(Word::parse("001")).theta, kPhi, 1e-15);
  EXPECT_NEAR(theta(Word::parse("00")), kPhi, 1e-13);
  const RootTheta t01 = theta_root(Word::parse("01"));
  EXPECT_DOUBLE_EQ(t01.theta, 1.0);
  EXPECT_FALSE(t01.simple);
  EXPECT_TRUE(theta_root(Word::parse("00")).simple);
  // Bracket contains the root and has 64-bit width.
  const RootTheta t = theta_root(Word::parse("10100101"));
  EXPECT_LT(t.lower, t.upper);
  EXPECT_LE(t.upper - t.lower, rpow(2, -60));
}

TEST(Theta, Denominators) {
  EXPECT_EQ(escape_denominator(Word::parse("0")), Polynomial::from_ints({-1, 1}));
  EXPECT_EQ(escape_denominator(Word::parse("00")), Polynomial::from_ints({-1, -1, 1}));
  EXPECT_EQ(escape_denominator(Word::parse("01")), Polynomial::from_ints({1, -2, 1}));
  EXPECT_EQ(escape_denominator(Word::parse("001")),
            Polynomial::from_ints({-1, 1}) * Polynomial::from_ints({-1, -1, 1}));
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& w : all_words(n)) ASSERT_EQ(reduced_denominator(w), escape_denominator(w)) << w.str();
}

TEST(Theta, EnginesAgree) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& w : all_words(n)) {
      const MatrixTheta m = theta_matrix(PatternSet::single(w));
      ASSERT_NEAR(theta_root(w).theta, m.theta, 1e-12) << w.str();
      ASSERT_LE(m.lower, m.theta);
      ASSERT_GE(m.upper, m.theta);
    }
  const MatrixTheta ternary = theta_matrix(PatternSet::parse("2", 3));
  EXPECT_NEAR(ternary.theta, 2.0, 1e-13);
  EXPECT_NEAR(theta_root(Word::parse("2", 3)).theta, 2.0, 1e-15);
}

TEST(EscapeRate, Examples) {
  EXPECT_NEAR(rho_of("00"), std::log(2 / kPhi), 1e-14);
  EXPECT_NEAR(rho_of("00"), 0.2119, 1e-4);
  EXPECT_NEAR(rho_of("0"), kLn2, 1e-15);
  EXPECT_NEAR(rho_of("01"), kLn2, 1e-15);
  const EscapeReport r = escape_rate(PatternSet::parse("10100101"));
  EXPECT_EQ(r.engine, Engine::root);
  EXPECT_TRUE(r.engines_agree);
  EXPECT_EQ(r.tau, 5u);
  EXPECT_EQ(*r.corr_number, 133);
  EXPECT_EQ(r.hole_measure, Rational(1, 256));
  const EscapeReport u = escape_rate(PatternSet::parse("00,100"));
  EXPECT_EQ(u.engine, Engine::matrix);
  EXPECT_FALSE(u.corr_number.has_value());
  // A cylinder and its union with its own preimage escape at the same rate.
  EXPECT_NEAR(u.rho, rho_of("00"), 1e-12);
}

TEST(EscapeRate, ComplementSymmetryAndRange) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& w : all_words(n)) {
      const double rho = rho_from_gap(theta_root(w).gap, 2);
      ASSERT_GT(rho, 0);
      ASSERT_LE(rho, kLn2 + 1e-15);
      ASSERT_EQ(rho, rho_from_gap(theta_root(w.complement()).gap, 2));
    }
}

TEST(CompareHoles, MainTheoremExample) {
  const HoleComparison c = compare_holes(Word::parse("00"), Word::parse("01"));
  EXPECT_EQ(c.order, 1);
  EXPECT_EQ(c.tau_w, 1u);
  EXPECT_EQ(c.tau_u, 2u);
  EXPECT_EQ(c.threshold, 3u);
  EXPECT_EQ(c.survival_crossover, 1u);
  const HoleComparison same = compare_holes(Word::parse("0110"), Word::parse("0110"));
  EXPECT_EQ(same.order, 0);
  EXPECT_FALSE(same.threshold.has_value());
  EXPECT_EQ(compare_holes(Word::parse("001"), Word::parse("011")).order, 0);
  EXPECT_THROW(compare_holes(Word::parse("00"), Word::parse("000")), Error);
}

TEST(Asymptotic, Estimates) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const Word w = Word::repeat(0, n) + Word::parse("1");
    EXPECT_DOUBLE_EQ(asymptotic_escape(w), std::ldexp(1.0, -static_cast<int>(n) - 1));
  }
  EXPECT_DOUBLE_EQ(asymptotic_escape(Word::parse("0")), 0.5);
  EXPECT_GT(std::abs(asymptotic_escape(Word::parse("0")) - kLn2), 0.19);
}

TEST(Scan, LevelFour) {
  const auto rows = scan_level(4);
  ASSERT_EQ(rows.size(), 16u);
  double lo = INFINITY;
  for (const auto& r : rows) lo = std::min(lo, r.rho);
  EXPECT_EQ(rows.front().rho, lo);
  EXPECT_EQ(rows.back().rho, lo);
  EXPECT_EQ(rows[0].word.str(), "0000");
  EXPECT_EQ(rows[0].index, 1u);
  const auto level1 = scan_level(1);
  EXPECT_NEAR(level1[0].rho, kLn2, 1e-15);
  EXPECT_EQ(level1[0].rho, level1[1].rho);
}

TEST(Scan, ExtremesUpToLevelEight) {
  ThetaCache cache;
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto rows = scan_level(n, 2, &cache);
    double lo = INFINITY, hi = 0;
    for (const auto& r : rows) {
      lo = std::min(lo, r.rho);
      hi = std::max(hi, r.rho);
    }
    EXPECT_EQ(rows.front().rho, lo);
    EXPECT_EQ(rows.back().rho, lo);
    EXPECT_EQ(rows[1].rho, hi);  // I_{2,N}
    for (const auto& r : rows) {
      if (r.rho == hi) EXPECT_EQ(r.tau, n) << r.word.str();
      if (r.rho == lo) EXPECT_EQ(r.tau, 1u) << r.word.str();
    }
  }
  EXPECT_GT(cache.size(), 0u);
}

TEST(Scan, MainTheoremOrderingLevelFive) {
  const auto rows = scan_level(5);
  for (const auto& a : rows)
    for (const auto& b : rows)
      if (b.tau > a.tau) ASSERT_GT(b.rho, a.rho) << a.word.str() << " " << b.word.str();
}

TEST(Point, Expansions) {
  EXPECT_EQ(Point::sqrt2_minus_1().cell_word(20).str(), "01101010000010011110");
  EXPECT_EQ(Point::golden_conjugate().cell_word(8).str(), "10011110");
  EXPECT_EQ(Point::parse("periodic:01").exact(), Rational(1, 3));
  EXPECT_EQ(Point::parse("1/3").cell_word(6).str(), "010101");
  EXPECT_EQ(Point::rational(0).cell_index(10), 0u);
  EXPECT_EQ(Point::rational(1).cell_index(3), 7u);
  EXPECT_THROW(Point::rational(Rational(1, 2)).cell_index(3), AmbiguousCellError);
  EXPECT_EQ(Point::rational(Rational(1, 2)).cell_index(3, 2, CellSide::left), 3u);
  EXPECT_EQ(Point::rational(Rational(1, 2)).cell_index(3, 2, CellSide::right), 4u);
  EXPECT_NO_THROW(Point::rational(Rational(1, 2)).cell_index(0));
  EXPECT_NEAR(Point::sqrt2_minus_1().approx(), std::numbers::sqrt2 - 1, 1e-15);
}

TEST(LocalEscape, PeriodicAndGenericPoints) {
  const LocalEscape zero = local_escape_ratio(Point::rational(0), 16);
  EXPECT_NEAR(zero.ratio, 0.5, 1e-3);
  EXPECT_EQ(zero.measure, rpow(2, -16));
  EXPECT_NEAR(local_escape_ratio(Point::rational(Rational(1, 3)), 16).ratio, 0.75, 1e-3);
  EXPECT_NEAR(local_escape_ratio(Point::sqrt2_minus_1(), 20).ratio, 1.0, 1e-2);
  // Period-3 point 1/7: ratio tends to 1 - 1/8.
  EXPECT_NEAR(local_escape_ratio(Point::parse("periodic:001"), 18).ratio, 0.875, 2e-3);
  // Ratios at x = 0 decrease toward 1/2.
  double previous = INFINITY;
  for (std::size_t n = 4; n <= 16; ++n) {
    const double r = local_escape_ratio(Point::rational(0), n).ratio;
    EXPECT_LT(r, previous);
    EXPECT_GT(r, 0.5);
    previous = r;
  }
}

TEST(TwoPeriodicPoints, FixedPointHoleEscapesSlower) {
  // Holes of length 2^-12 placed on a 2^-16 grid: those holding the fixed
  // point 0 in their interior (wrapping round the circle) against those
  // holding the period-2 point 1/3.
  const Rational len = rpow(2, -12), step = rpow(2, -16), third(1, 3);
  double worst_fixed = 0, best_period_two = INFINITY;
  for (int k = 1; k < 16; ++k) {
    const Rational left = step * k;
    const IntervalUnion around_zero({Interval{Rational(0), len - left}, Interval{1 - left, Rational(1)}});
    worst_fixed = std::max(worst_fixed, escape_rate(code_hole(MapSpec::doubling(), around_zero)).rho);
  }
  int holes = 0;
  for (long j = 65536 / 3 - 16; j <= 65536 / 3; ++j) {
    const Rational c = step * j;
    if (!(c < third && third < c + len)) continue;
    ++holes;
    const IntervalUnion around_third({Interval{c, c + len}});
    best_period_two = std::min(best_period_two, escape_rate(code_hole(MapSpec::doubling(), around_third)).rho);
  }
  EXPECT_EQ(holes, 16);
  EXPECT_LT(worst_fixed, best_period_two);
}
