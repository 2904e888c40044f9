#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "escapelab/numeric.hpp"
#include "escapelab/polynomial.hpp"

namespace escapelab {

// A finite, nonempty word over the alphabet {0, ..., m-1}.
class Word {
 public:
  using Symbol = std::uint8_t;

  // The one-letter word "0".
  Word() : symbols_{0}, alphabet_(2) {}
  Word(std::vector<Symbol> symbols, unsigned alphabet = 2);

  // Symbols are written as 0-9 then a-z; "10100101" is a binary word.
  static Word parse(std::string_view text, unsigned alphabet = 2);
  // The length-`length` base-m expansion of `index` (most significant first).
  static Word from_index(std::uint64_t index, std::size_t length, unsigned alphabet = 2);
  static Word repeat(Symbol s, std::size_t length, unsigned alphabet = 2);

  std::size_t size() const { return symbols_.size(); }
  unsigned alphabet() const { return alphabet_; }
  std::span<const Symbol> symbols() const { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  // Base-m value of the word read as a number; the cylinder's 0-based index.
  std::uint64_t index() const;

  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t start) const;
  Word reversed() const;
  // s -> m-1-s for every symbol.
  Word complement() const;
  friend Word operator+(const Word& a, const Word& b);

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Symbol> symbols_;
  unsigned alphabet_;
};

// bits[l] == 1 iff the word agrees with itself shifted by l positions.
struct Correlation {
  std::vector<std::uint8_t> bits;

  std::size_t size() const { return bits.size(); }
  bool operator[](std::size_t l) const { return bits[l] != 0; }
  // "[10000101]"
  std::string str() const;
  // Bits read as a binary number, b_1 most significant.
  BigInt number() const;

  friend bool operator==(const Correlation&, const Correlation&) = default;
  friend std::strong_ordering operator<=>(const Correlation&, const Correlation&) = default;
};

// f_w(z) = b_1 z^{k-1} + ... + b_k with integer coefficients.
struct CorrelationPolynomial {
  std::vector<BigInt> descending;  // b_1 ... b_k

  int degree() const { return static_cast<int>(descending.size()) - 1; }
  BigInt evaluate(const BigInt& z) const;
  Polynomial as_polynomial() const;
};

Correlation autocorrelation(const Word& w);
BigInt correlation_number(const Word& w);
CorrelationPolynomial correlation_polynomial(const Word& w);

// Smallest shift l in [1, N-1] with b_{l+1} = 1, or N when the word has no
// proper self-overlap.
std::size_t recurrence_time(const Word& w);
std::size_t recurrence_time(const Correlation& c);

// 1-based index of the first position where two equal-length correlations
// differ; 0 when they are equal.
std::size_t first_difference(const Correlation& a, const Correlation& b);

// All m^n words of length n in lexicographic (= cylinder index) order.
std::vector<Word> all_words(std::size_t length, unsigned alphabet = 2);

}  // namespace escapelab
