#include <gtest/gtest.h>

#include <random>

#include <escapelab/intervals.hpp>
#include <escapelab/numeric.hpp>
#include <escapelab/polynomial.hpp>

using namespace escapelab;

TEST(Numeric, ParseRational) {
  EXPECT_EQ(parse_rational("5/16"), Rational(5, 16));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("0.3125"), Rational(5, 16));
  EXPECT_EQ(parse_rational("010/4"), Rational(5, 2));  // leading zeros are decimal, not octal
  EXPECT_EQ(parse_rational("0.0625"), Rational(1, 16));
  EXPECT_EQ(parse_rational("1"), Rational(1));
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Numeric, Formatting) {
  EXPECT_EQ(to_string(Rational(3, 4)), "3/4");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_EQ(to_string(ipow(2, 70)), "1180591620717411303424");
}

TEST(Numeric, AdicLevel) {
  EXPECT_EQ(adic_level(Rational(5, 16), 2), 4u);
  EXPECT_EQ(adic_level(Rational(0), 2), 0u);
  EXPECT_EQ(adic_level(Rational(1), 2), 0u);
  EXPECT_EQ(adic_level(Rational(2, 9), 3), 2u);
  EXPECT_FALSE(adic_level(Rational(1, 3), 2).has_value());
  EXPECT_FALSE(adic_level(Rational(1, 6), 2).has_value());
}

TEST(Numeric, LogBig) {
  EXPECT_NEAR(log_big(ipow(2, 2000)), 2000 * std::log(2.0), 1e-9);
  EXPECT_EQ(exact_log(ipow(3, 40), 3), 40u);
  EXPECT_FALSE(exact_log(BigInt(10), 3).has_value());
}

TEST(Polynomial, ArithmeticAndDivision) {
  const Polynomial a = Polynomial::from_ints({-1, 0, 1});  // z^2 - 1
  const Polynomial b = Polynomial::from_ints({-1, 1});     // z - 1
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, Polynomial::from_ints({1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q * b + r, a);
  EXPECT_EQ(a.derivative(), Polynomial::from_ints({0, 2}));
  EXPECT_EQ(a.to_string('z'), "z^2 - 1");
  EXPECT_EQ(Polynomial().degree(), -1);
}

TEST(Polynomial, DivisionIdentityOnRandomPolynomials) {
  std::mt19937_64 rng(7);
  auto random_poly = [&](int degree) {
    std::vector<long> c(degree + 1);
    for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
    c.back() = 1 + static_cast<long>(rng() % 3);
    return Polynomial::from_ints(c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_poly(static_cast<int>(rng() % 9)), b = random_poly(static_cast<int>(rng() % 5));
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(Polynomial, GcdAndSquareFree) {
  const Polynomial z_minus_1 = Polynomial::from_ints({-1, 1});
  const Polynomial golden = Polynomial::from_ints({-1, -1, 1});
  EXPECT_EQ(gcd(z_minus_1 * golden, z_minus_1 * z_minus_1), z_minus_1);
  EXPECT_EQ(square_free_part(z_minus_1 * z_minus_1 * golden), z_minus_1 * golden);
}

TEST(Polynomial, SturmCountsDistinctRoots) {
  const Polynomial p = Polynomial::from_ints({-1, 1}) * Polynomial::from_ints({-1, -1, 1});  // roots 1, phi, -1/phi
  SturmSequence s(p);
  EXPECT_EQ(s.count_roots(-2, 2), 3);
  EXPECT_EQ(s.count_roots(1, 2), 1);  // (1, 2] excludes 1
  EXPECT_EQ(s.count_roots(0, 1), 1);
  SturmSequence sq(square_free_part(Polynomial::from_ints({1, -2, 1})));
  EXPECT_EQ(sq.count_roots(0, 2), 1);
}

TEST(Intervals, UnionMergesAndMeasures) {
  IntervalUnion u({{Rational(1, 2), Rational(5, 8)}, {0, Rational(1, 4)}, {Rational(1, 8), Rational(1, 4)}});
  EXPECT_EQ(u.str(), "[0,1/4) U [1/2,5/8)");
  EXPECT_EQ(u.measure(), Rational(3, 8));
  IntervalUnion touching({{0, Rational(1, 4)}, {Rational(1, 4), Rational(1, 2)}});
  EXPECT_EQ(touching.parts().size(), 1u);
  EXPECT_EQ(u.intersect(touching).measure(), Rational(1, 4));
  EXPECT_EQ(u.unite(touching).measure(), Rational(5, 8));
  EXPECT_TRUE(u.contains(0));
  EXPECT_FALSE(u.contains(Rational(1, 4)));
}
