#include <gtest/gtest.h>

#include <escapelab/maps.hpp>
#include <escapelab/words.hpp>

using namespace escapelab;

namespace {

// Least period p of a periodic sequence (u)^infinity whose first |w|
// symbols spell w, found by trying every block u.
std::size_t brute_force_min_period(const Word& w) {
  for (std::size_t p = 1; p <= w.size(); ++p) {
    for (std::uint64_t block = 0; block < (std::uint64_t{1} << p); ++block) {
      bool ok = true;
      for (std::size_t i = 0; i < w.size() && ok; ++i)
        ok = w[i] == ((block >> (p - 1 - i % p)) & 1);
      if (ok) return p;
    }
  }
  return w.size();
}

// Direct overlap test for shift l.
bool overlaps(const Word& w, std::size_t l) {
  for (std::size_t i = 0; i + l < w.size(); ++i)
    if (w[i] != w[i + l]) return false;
  return true;
}

}  // namespace

TEST(Word, ParseAndIndex) {
  const Word w = Word::parse("0101");
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(w.index(), 5u);
  EXPECT_EQ(w.str(), "0101");
  EXPECT_EQ(Word::from_index(5, 4), w);
  EXPECT_EQ(Word::parse("21", 3).index(), 7u);
  EXPECT_EQ(w.complement().str(), "1010");
  EXPECT_EQ(w.reversed().str(), "1010");
  EXPECT_EQ((Word::parse("01") + Word::parse("1")).str(), "011");
  EXPECT_THROW(Word::parse(""), Error);
  EXPECT_THROW(Word::parse("012"), Error);
  EXPECT_THROW(Word::parse("01", 1), Error);
}

TEST(Autocorrelation, WorkedExample) {
  const Word w = Word::parse("10100101");
  EXPECT_EQ(autocorrelation(w).str(), "[10000101]");
  EXPECT_EQ(correlation_number(w), 133);
  EXPECT_EQ(correlation_polynomial(w).evaluate(2), 133);
  EXPECT_EQ(recurrence_time(w), 5u);
}

TEST(Autocorrelation, Families) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const Word zeros = Word::repeat(0, n);
    EXPECT_EQ(autocorrelation(zeros).str(), "[" + std::string(n, '1') + "]");
    const Word w1 = zeros + Word::parse("1");
    EXPECT_EQ(autocorrelation(w1).str(), "[1" + std::string(n, '0') + "]");
    EXPECT_EQ(recurrence_time(w1), n + 1);
    // f_{0^N 1} = z^N and f_{0^N} = sum of z^j.
    EXPECT_EQ(correlation_polynomial(w1).as_polynomial(), Polynomial::monomial(1, n));
    Polynomial geometric;
    for (std::size_t j = 0; j < n; ++j) geometric = geometric + Polynomial::monomial(1, j);
    EXPECT_EQ(correlation_polynomial(zeros).as_polynomial(), geometric);
  }
  EXPECT_EQ(autocorrelation(Word::parse("1")).str(), "[1]");
  EXPECT_EQ(correlation_number(Word::parse("0")), 1);
  EXPECT_EQ(correlation_number(Word::parse("00")), 3);
  EXPECT_EQ(autocorrelation(Word::parse("00000001")).str(), "[10000000]");
}

TEST(RecurrenceTime, SmallHoles) {
  EXPECT_EQ(recurrence_time(Word::parse("00")), 1u);
  EXPECT_EQ(recurrence_time(Word::parse("01")), 2u);
  EXPECT_EQ(recurrence_time(Word::parse("10")), 2u);
  EXPECT_EQ(recurrence_time(Word::parse("0")), 1u);
}

TEST(Autocorrelation, PropertiesExhaustive) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& w : all_words(n)) {
      const Correlation c = autocorrelation(w);
      ASSERT_EQ(c.size(), n);
      ASSERT_TRUE(c[0]);
      for (std::size_t l = 0; l < n; ++l) ASSERT_EQ(c[l], overlaps(w, l)) << w.str() << " shift " << l;
      ASSERT_EQ(autocorrelation(w.complement()), c);
      const BigInt number = correlation_number(w);
      ASSERT_GE(number, ipow(2, n - 1));
      ASSERT_LE(number, ipow(2, n) - 1);
      ASSERT_EQ(correlation_polynomial(w).evaluate(2), number);
      ASSERT_EQ(correlation_polynomial(w).degree(), static_cast<int>(n) - 1);
      const std::size_t tau = recurrence_time(w);
      ASSERT_GE(tau, 1u);
      ASSERT_LE(tau, n);
      ASSERT_EQ(tau, brute_force_min_period(w)) << w.str();
    }
  }
}

TEST(Autocorrelation, NumberOrderMatchesBitOrder) {
  const auto words = all_words(7);
  for (std::size_t i = 0; i < words.size(); i += 3)
    for (std::size_t j = 0; j < words.size(); j += 5) {
      const Correlation a = autocorrelation(words[i]), b = autocorrelation(words[j]);
      EXPECT_EQ(a < b, correlation_number(words[i]) < correlation_number(words[j]));
    }
}

TEST(RecurrenceTime, NeverExceedsGeometricTime) {
  // Geometric tau on the dyadic cylinder; equal in every case at these
  // levels, including cylinders touching 0 or 1.
  const MapSpec doubling = MapSpec::doubling();
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::uint64_t i = 1; i <= (std::uint64_t{1} << n); ++i) {
      const Word w = Word::from_index(i - 1, n);
      const std::size_t geometric = poincare_time(doubling, MarkovCylinder{n, i});
      ASSERT_LE(recurrence_time(w), geometric);
      ASSERT_EQ(recurrence_time(w), geometric) << w.str();
    }
}

TEST(Correlation, FirstDifference) {
  const Correlation a = autocorrelation(Word::parse("00"));
  const Correlation b = autocorrelation(Word::parse("01"));
  EXPECT_EQ(first_difference(a, b), 2u);
  EXPECT_EQ(first_difference(a, a), 0u);
}

TEST(Word, AllWordsInIndexOrder) {
  const auto words = all_words(3, 3);
  ASSERT_EQ(words.size(), 27u);
  for (std::size_t i = 0; i < words.size(); ++i) EXPECT_EQ(words[i].index(), i);
}
