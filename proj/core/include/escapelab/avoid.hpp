#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "escapelab/numeric.hpp"
#include "escapelab/words.hpp"

namespace escapelab {

// A finite union of cylinders, stored as forbidden words of one common
// length L. Shorter words are expanded into all their length-L extensions,
// so the set always describes the same subset of sequence space.
class PatternSet {
 public:
  explicit PatternSet(std::vector<Word> patterns);
  static PatternSet single(const Word& w);
  // Comma-separated symbol strings, e.g. "000,001,0100".
  static PatternSet parse(std::string_view text, unsigned alphabet = 2);

  std::size_t length() const { return length_; }
  unsigned alphabet() const { return alphabet_; }
  std::size_t size() const { return patterns_.size(); }
  bool is_single() const { return patterns_.size() == 1; }
  const std::vector<Word>& patterns() const { return patterns_; }

  // |P| * m^{-L}: the measure of the hole under the Bernoulli measure.
  Rational measure() const;
  std::string str() const;

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  std::vector<Word> patterns_;
  std::size_t length_ = 0;
  unsigned alphabet_ = 2;
};

// Upper bound on the number of words expanded during normalization.
inline constexpr std::size_t kMaxNormalizedPatterns = std::size_t{1} << 22;

// Aho-Corasick automaton recognizing words that avoid a pattern set. Only
// live states are kept; a transition into a pattern goes to kDead.
class AvoidanceAutomaton {
 public:
  static constexpr std::uint32_t kDead = 0xffffffffu;

  explicit AvoidanceAutomaton(const PatternSet& patterns);

  std::size_t states() const { return depth_.size(); }
  unsigned alphabet() const { return alphabet_; }
  std::uint32_t start() const { return 0; }
  std::uint32_t next(std::uint32_t state, unsigned symbol) const {
    return delta_[static_cast<std::size_t>(state) * alphabet_ + symbol];
  }
  // Length of the longest pattern prefix the state represents.
  std::size_t depth(std::uint32_t state) const { return depth_[state]; }

  // entry[s][t] = number of symbols taking live state s to live state t.
  std::vector<std::vector<std::uint32_t>> transfer_matrix() const;

  // Counts of accepted words of length 0..n_max.
  std::vector<BigInt> count_series(std::size_t n_max) const;

 private:
  unsigned alphabet_;
  std::vector<std::uint32_t> delta_;
  std::vector<std::size_t> depth_;
};

struct OracleLimits {
  // Largest m^n the enumeration oracle will visit (2^22 for binary words).
  std::uint64_t max_words = std::uint64_t{1} << 22;
};

class OracleLimitError : public Error {
 public:
  using Error::Error;
};

// Exact count of length-n words with no occurrence of any pattern, by
// enumerating words symbol by symbol. Validation oracle only.
BigInt brute_force_count(const PatternSet& p, std::size_t n, OracleLimits limits = {});
// Same enumeration, reporting every length 0..n_max in one pass.
std::vector<BigInt> brute_force_series(const PatternSet& p, std::size_t n_max, OracleLimits limits = {});

// Automaton dynamic programming with exact integers.
BigInt count_avoiding(const PatternSet& p, std::size_t n);
std::vector<BigInt> count_avoiding_series(const PatternSet& p, std::size_t n_max);

// Coefficients c_w(0..n_max) of F_w(z) = z f_w(z) / (1 + (z - m) f_w(z))
// expanded in powers of 1/z, via the integer recurrence of its rational form.
std::vector<BigInt> gf_coefficients(const Word& w, std::size_t n_max);

// n -> 1 - lambda(Omega_n(hole)) = c(n + L) / m^(n + L), n = 0..horizon.
struct SurvivalSeries {
  std::size_t pattern_length = 0;
  unsigned alphabet = 2;
  std::vector<BigInt> counts;      // c(n + L)
  std::vector<Rational> measures;  // survival probabilities s_n

  std::size_t horizon() const { return measures.empty() ? 0 : measures.size() - 1; }
  BigInt denominator(std::size_t n) const;
};

SurvivalSeries survival_series(const PatternSet& p, std::size_t n_max);

// N + min{i : b_i != a_i} - 1 for equal-length words with distinct
// correlations.
std::size_t dominance_threshold(const Word& w, const Word& u);

// Poincare recurrence time of a union of cylinders: the least n >= 1 for
// which some pattern's n-shift is compatible with some pattern, else L.
std::size_t recurrence_time(const PatternSet& p);

}  // namespace escapelab
