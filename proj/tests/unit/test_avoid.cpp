#include <gtest/gtest.h>

#include <random>

#include <escapelab/avoid.hpp>
#include <escapelab/spectral.hpp>

using namespace escapelab;

namespace {

std::vector<BigInt> fibonacci_from(long a, long b, std::size_t count) {
  std::vector<BigInt> out{BigInt(a), BigInt(b)};
  while (out.size() < count) out.push_back(out[out.size() - 1] + out[out.size() - 2]);
  out.resize(count);
  return out;
}

Word random_word(std::mt19937_64& rng, std::size_t length) {
  std::vector<Word::Symbol> s(length);
  for (auto& x : s) x = static_cast<Word::Symbol>(rng() & 1);
  return Word(std::move(s));
}

}  // namespace

TEST(PatternSet, NormalizesToCommonLength) {
  const PatternSet p = PatternSet::parse("000,001,0100");
  EXPECT_EQ(p.length(), 4u);
  EXPECT_EQ(p.str(), "0000,0001,0010,0011,0100");
  EXPECT_EQ(p.measure(), Rational(5, 16));
  EXPECT_EQ(PatternSet::parse("01,01").size(), 1u);
  EXPECT_EQ(PatternSet::parse("0,01").str(), "00,01");
  EXPECT_THROW(PatternSet::parse(""), Error);
  EXPECT_THROW(PatternSet::parse("01,2"), Error);
}

TEST(BruteForce, SmallCases) {
  EXPECT_EQ(brute_force_count(PatternSet::parse("11"), 4), 8);
  EXPECT_EQ(brute_force_count(PatternSet::parse("0"), 5), 1);
  const Word w = Word::parse("10100101");
  for (std::size_t n = 0; n < w.size(); ++n) EXPECT_EQ(brute_force_count(PatternSet::single(w), n), ipow(2, n));
  EXPECT_THROW(brute_force_count(PatternSet::parse("11"), 23), OracleLimitError);
}

TEST(CountAvoiding, MatchesKnownSequences) {
  EXPECT_EQ(count_avoiding(PatternSet::parse("11"), 4), 8);
  EXPECT_EQ(count_avoiding(PatternSet::parse("00"), 10), 144);
  // Avoiding 00: c(n) = F(n+2).
  EXPECT_EQ(count_avoiding_series(PatternSet::parse("00"), 30), fibonacci_from(1, 2, 31));
  EXPECT_EQ(gf_coefficients(Word::parse("00"), 30), fibonacci_from(1, 2, 31));
  // Avoiding 01 leaves 1^a 0^b.
  const auto c01 = count_avoiding_series(PatternSet::parse("01"), 40);
  for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(c01[n], static_cast<unsigned long>(n + 1));
  const PatternSet w = PatternSet::parse("10100101");
  EXPECT_EQ(count_avoiding(w, 12), brute_force_count(w, 12));
  EXPECT_EQ(count_avoiding(PatternSet::parse("0,1"), 3), 0);
}

TEST(CountAvoiding, TernaryAlphabet) {
  // Avoiding the single symbol 2 over {0,1,2} leaves 2^n words.
  EXPECT_EQ(count_avoiding(PatternSet::parse("2", 3), 9), ipow(2, 9));
  const PatternSet p = PatternSet::parse("01,22", 3);
  EXPECT_EQ(count_avoiding_series(p, 10), brute_force_series(p, 10));
  EXPECT_EQ(gf_coefficients(Word::parse("120", 3), 12), count_avoiding_series(PatternSet::parse("120", 3), 12));
}

TEST(CountAvoiding, OracleEquivalenceOnRandomSets) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t len = 1 + rng() % 6;
    std::vector<Word> words;
    for (std::size_t k = 0, count = 1 + rng() % 5; k < count; ++k) words.push_back(random_word(rng, 1 + rng() % len));
    const PatternSet p(words);
    ASSERT_EQ(count_avoiding_series(p, 16), brute_force_series(p, 16)) << p.str();
  }
}

TEST(GfCoefficients, MatchesAutomatonForAllShortWords) {
  for (std::size_t n = 1; n <= 9; ++n)
    for (const auto& w : all_words(n)) ASSERT_EQ(gf_coefficients(w, 48), count_avoiding_series(PatternSet::single(w), 48));
}

TEST(GfCoefficients, ZerosVersusZerosThenOne) {
  // F_{0^N} = F_{0^N 1} (1 - z^-N), read coefficientwise.
  for (std::size_t n = 1; n <= 10; ++n) {
    const Word w2 = Word::repeat(0, n), w1 = w2 + Word::parse("1");
    const auto c1 = gf_coefficients(w1, 64), c2 = gf_coefficients(w2, 64);
    for (std::size_t j = 0; j <= 64; ++j) EXPECT_EQ(c2[j], c1[j] - (j >= n ? c1[j - n] : BigInt(0)));
    // Expansion of 1 / (1 - (2t - t^{N+1})): c(j) = 2 c(j-1) - c(j-N-1).
    for (std::size_t j = 1; j <= 64; ++j) {
      const BigInt back = j >= n + 1 ? c1[j - n - 1] : BigInt(0);
      EXPECT_EQ(c1[j], 2 * c1[j - 1] - back);
    }
  }
}

TEST(Survival, SeriesProperties) {
  const SurvivalSeries s0 = survival_series(PatternSet::parse("0"), 20);
  for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(s0.measures[n], rpow(2, -static_cast<long>(n + 1)));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Word> words;
    for (std::size_t k = 0, count = 1 + rng() % 4; k < count; ++k) words.push_back(random_word(rng, 1 + rng() % 6));
    const PatternSet p(words);
    const SurvivalSeries s = survival_series(p, 30);
    EXPECT_EQ(s.measures[0], 1 - p.measure());
    for (std::size_t n = 0; n <= 30; ++n) {
      EXPECT_GE(s.measures[n], 0);
      EXPECT_LE(s.measures[n], 1);
      if (n) EXPECT_LE(s.measures[n], s.measures[n - 1]);
      EXPECT_EQ(s.measures[n] * s.denominator(n), s.counts[n]);
    }
  }
}

TEST(Survival, HoleAtFixedPointOutlastsPeriodTwoHole) {
  const auto a = survival_series(PatternSet::parse("00"), 64), b = survival_series(PatternSet::parse("01"), 64);
  for (std::size_t n = 1; n <= 64; ++n) EXPECT_LT(b.measures[n], a.measures[n]);
}

TEST(Dominance, Threshold) {
  EXPECT_EQ(dominance_threshold(Word::parse("00"), Word::parse("01")), 3u);
  EXPECT_EQ(dominance_threshold(Word::parse("000"), Word::parse("001")), 4u);
  EXPECT_THROW(dominance_threshold(Word::parse("00"), Word::parse("00")), Error);
  EXPECT_THROW(dominance_threshold(Word::parse("001"), Word::parse("011")), Error);  // equal correlations
  EXPECT_THROW(dominance_threshold(Word::parse("00"), Word::parse("001")), Error);
  const auto cw = gf_coefficients(Word::parse("000"), 40), cu = gf_coefficients(Word::parse("001"), 40);
  for (std::size_t n = 4; n <= 40; ++n) EXPECT_GT(cw[n], cu[n]);
  EXPECT_EQ(cw[3], cu[3]);
}

TEST(Dominance, HoldsFromThresholdOnRandomPairs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t len = 2 + rng() % 9;
    Word w = random_word(rng, len), u = random_word(rng, len);
    if (autocorrelation(w) == autocorrelation(u)) continue;
    if (correlation_number(w) < correlation_number(u)) std::swap(w, u);
    const std::size_t n0 = dominance_threshold(w, u);
    const auto cw = gf_coefficients(w, 128), cu = gf_coefficients(u, 128);
    for (std::size_t n = n0; n <= 128; ++n) ASSERT_GT(cw[n], cu[n]) << w.str() << " " << u.str() << " n=" << n;
  }
}

TEST(Growth, CountsTrackThetaPower) {
  // c_w(n) / theta^n settles to a constant when theta is a simple root;
  // 01 and 10 have a double root at 1 and grow linearly instead.
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& w : all_words(n)) {
      const RootTheta t = theta_root(w);
      if (!t.simple) {
        EXPECT_TRUE(w.str() == "01" || w.str() == "10") << w.str();
        continue;
      }
      const auto c = gf_coefficients(w, 64);
      double lo = INFINITY, hi = 0;
      for (std::size_t k = 20; k <= 64; ++k) {
        const double ratio = std::exp(log_big(c[k]) - static_cast<double>(k) * std::log(t.theta));
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
      ASSERT_GT(lo, 0) << w.str();
      ASSERT_LT(hi / lo, 1.05) << w.str();
    }
}

TEST(Automaton, RowSumsAndStates) {
  const AvoidanceAutomaton a(PatternSet::parse("10100101"));
  EXPECT_EQ(a.states(), 8u);
  const auto t = a.transfer_matrix();
  unsigned full_rows = 0;
  for (const auto& row : t) {
    unsigned sum = 0;
    for (auto v : row) sum += v;
    EXPECT_LE(sum, 2u);
    full_rows += sum == 2;
  }
  EXPECT_EQ(full_rows, 7u);  // only the state one symbol short of a match can die
}

TEST(RecurrenceTime, PatternSets) {
  EXPECT_EQ(recurrence_time(PatternSet::parse("00,100")), 1u);
  EXPECT_EQ(recurrence_time(PatternSet::parse("01")), 2u);
  EXPECT_EQ(recurrence_time(PatternSet::parse("0000,0001,0010,0011,0100")), 1u);
  EXPECT_EQ(recurrence_time(PatternSet::parse("0011,0110")), 1u);
}
