#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace escapelab {

using BigInt = mpz_class;
using Rational = mpq_class;

// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt ipow(unsigned long base, unsigned long exponent);
Rational rpow(unsigned long base, long exponent);

// Parses "p/q", an integer, or a finite decimal such as "0.3125".
Rational parse_rational(std::string_view text);

// "p/q" (or "p" when q == 1).
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

double to_double(const Rational& value);
double to_double(const BigInt& value);

// Natural log of a positive big integer without overflowing a double.
double log_big(const BigInt& value);

// If value == base^k for some k >= 0, returns k.
std::optional<unsigned long> exact_log(const BigInt& value, unsigned long base);

// Largest k with base^k dividing the denominator of x exactly, provided the
// denominator is a pure power of base; nullopt otherwise.
std::optional<unsigned long> adic_level(const Rational& x, unsigned long base);

}  // namespace escapelab
