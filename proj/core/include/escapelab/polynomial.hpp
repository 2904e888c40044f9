#pragma once

#include <string>
#include <utility>
#include <vector>

#include "escapelab/numeric.hpp"

namespace escapelab {

// Univariate polynomial with exact rational coefficients, stored in
// ascending order of degree and kept trimmed (no zero leading coefficient).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial from_ints(const std::vector<long>& ascending);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& z) const;
  int sign_at(const Rational& z) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  bool has_integer_coefficients() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor over Q (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

// p / gcd(p, p'), made monic: same distinct roots, all simple.
Polynomial square_free_part(const Polynomial& p);

// Sturm chain of a polynomial; counts distinct real roots in half-open
// intervals (a, b].
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  int sign_changes(const Rational& z) const;
  int count_roots(const Rational& a, const Rational& b) const;
  const std::vector<Polynomial>& chain() const { return chain_; }

 private:
  std::vector<Polynomial> chain_;
};

}  // namespace escapelab
