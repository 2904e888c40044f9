#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "escapelab/avoid.hpp"
#include "escapelab/numeric.hpp"
#include "escapelab/polynomial.hpp"
#include "escapelab/words.hpp"

namespace escapelab {

// 1 + (z - m) f_w(z): the denominator of the avoidance generating function.
Polynomial escape_denominator(const Word& w);
// The denominator after cancelling any factor shared with z f_w(z).
Polynomial reduced_denominator(const Word& w);

// Growth constant from the generating function: the largest real root of
// the reduced denominator, isolated with a Sturm chain and refined by exact
// bisection on dyadic rationals.
struct RootTheta {
  double theta = 0;
  double gap = 0;    // m - theta, without cancellation error
  Rational lower;    // theta lies in (lower, upper]
  Rational upper;
  bool simple = true;  // the unreduced denominator changes sign across the bracket
};

RootTheta theta_root(const Word& w, unsigned bisection_bits = 64);

// Growth constant as the spectral radius of the automaton's transfer
// matrix: per strongly connected component, power iteration on A + I with
// Collatz-Wielandt bounds.
struct MatrixTheta {
  double theta = 0;
  double lower = 0;
  double upper = 0;
  std::size_t iterations = 0;
};

MatrixTheta theta_matrix(const AvoidanceAutomaton& automaton, double rel_tol = 1e-15);
MatrixTheta theta_matrix(const PatternSet& p, double rel_tol = 1e-15);

// Root-engine theta, checked against the matrix engine; throws when the two
// disagree by more than `tolerance`.
double theta(const Word& w, double tolerance = 1e-10);

// ln m - ln theta, computed from the gap m - theta.
double rho_from_gap(double gap, unsigned alphabet);

enum class Engine { root, matrix, fit };
std::string_view to_string(Engine e);

struct EscapeReport {
  double theta = 0;
  double rho = 0;
  std::size_t tau = 0;
  std::optional<BigInt> corr_number;  // single-pattern holes only
  Engine engine = Engine::matrix;
  double tolerance = 0;
  std::optional<double> theta_root;
  std::optional<double> theta_matrix;
  bool engines_agree = true;
  unsigned alphabet = 2;
  std::size_t pattern_length = 0;
  std::size_t pattern_count = 0;
  Rational hole_measure;
};

EscapeReport escape_rate(const PatternSet& p, double tolerance = 1e-10);

// Memoizes root-engine results by correlation, which is all theta depends on.
class ThetaCache {
 public:
  RootTheta get(const Word& w);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<unsigned, std::vector<std::uint8_t>>, RootTheta> cache_;
};

struct HoleComparison {
  int order = 0;  // sign of rho(u) - rho(w)
  std::size_t tau_w = 0;
  std::size_t tau_u = 0;
  double rho_w = 0;
  double rho_u = 0;
  std::optional<std::size_t> threshold;           // dominance threshold
  std::optional<std::size_t> survival_crossover;  // min{i : b_i != a_i} - 1
};

HoleComparison compare_holes(const Word& w, const Word& u);

// 1 / (m f_w(m)): the leading-order escape rate for long words.
double asymptotic_escape(const Word& w);

enum class CellSide { unspecified, left, right };

class AmbiguousCellError : public Error {
 public:
  using Error::Error;
};

// A point of [0,1] given exactly: a rational, or an irrational whose scaled
// floor floor(x * M) is computed with integer arithmetic.
class Point {
 public:
  static Point rational(const Rational& x);
  static Point sqrt2_minus_1();
  static Point golden_conjugate();
  // 0.(block)(block)... in base `block.alphabet()`.
  static Point periodic(const Word& block);
  // "1/3", "0.25", "sqrt2-1", "golden", "periodic:01"
  static Point parse(std::string_view text);

  const std::string& label() const { return label_; }
  const std::optional<Rational>& exact() const { return exact_; }
  double approx() const;

  // 0-based index of the level-N cell of the base-m partition containing x.
  std::uint64_t cell_index(std::size_t level, unsigned alphabet = 2,
                           CellSide side = CellSide::unspecified) const;
  Word cell_word(std::size_t level, unsigned alphabet = 2, CellSide side = CellSide::unspecified) const;

 private:
  std::string label_;
  std::optional<Rational> exact_;
  std::function<BigInt(const BigInt&)> scaled_floor_;
};

struct LocalEscape {
  Word word;
  double rho = 0;
  Rational measure;
  double ratio = 0;  // rho / measure
};

LocalEscape local_escape_ratio(const Point& x, std::size_t level, CellSide side = CellSide::unspecified,
                               unsigned alphabet = 2, ThetaCache* cache = nullptr);

struct ScanRow {
  std::size_t level = 0;
  std::uint64_t index = 0;  // 1-based cylinder index
  Word word;
  std::size_t tau = 0;
  BigInt corr_number;
  double theta = 0;
  double rho = 0;
  double rho_asymptotic = 0;
};

ScanRow scan_word(std::size_t level, std::uint64_t index, const Word& w, ThetaCache* cache = nullptr);
// Every level-N cylinder of the full m-shift, in index order.
std::vector<ScanRow> scan_level(std::size_t level, unsigned alphabet = 2, ThetaCache* cache = nullptr);

}  // namespace escapelab
