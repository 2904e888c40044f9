#include "escapelab/numeric.hpp"

#include <cmath>
#include <string>

namespace escapelab {

BigInt ipow(unsigned long base, unsigned long exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

Rational rpow(unsigned long base, long exponent) {
  if (exponent >= 0) return Rational(ipow(base, static_cast<unsigned long>(exponent)));
  Rational r(BigInt(1), ipow(base, static_cast<unsigned long>(-exponent)));
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("empty rational literal");
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      BigInt num(s.substr(0, slash), 10);
      BigInt den(s.substr(slash + 1), 10);
      if (den == 0) throw Error("zero denominator in '" + s + "'");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      bool negative = !digits.empty() && digits[0] == '-';
      if (digits.empty() || digits == "-") throw Error("malformed decimal '" + s + "'");
      if (s.substr(0, dot).empty() || s.substr(0, dot) == "-") digits.insert(negative ? 1 : 0, "0");
      Rational r(BigInt(digits, 10), ipow(10, s.size() - dot - 1));
      r.canonicalize();
      return r;
    }
    return Rational(BigInt(s, 10));
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational literal '" + s + "'");
  }
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

double to_double(const Rational& value) { return mpq_get_d(value.get_mpq_t()); }

double to_double(const BigInt& value) { return mpz_get_d(value.get_mpz_t()); }

double log_big(const BigInt& value) {
  if (value <= 0) throw Error("log of non-positive integer");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

std::optional<unsigned long> exact_log(const BigInt& value, unsigned long base) {
  if (value <= 0 || base < 2) return std::nullopt;
  BigInt v = value;
  unsigned long k = 0;
  while (v > 1) {
    if (mpz_divisible_ui_p(v.get_mpz_t(), base) == 0) return std::nullopt;
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), base);
    ++k;
  }
  return k;
}

std::optional<unsigned long> adic_level(const Rational& x, unsigned long base) {
  return exact_log(x.get_den(), base);
}

}  // namespace escapelab
