#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "escapelab/avoid.hpp"
#include "escapelab/intervals.hpp"
#include "escapelab/numeric.hpp"
#include "escapelab/words.hpp"

namespace escapelab {

enum class MapKind { doubling, expanding, tent, logistic, baker, rotation };

struct MapSpec {
  MapKind kind = MapKind::doubling;
  unsigned kappa = 2;  // expanding maps x -> kappa x mod 1
  double alpha = 0;    // rotation angle

  static MapSpec doubling() { return {}; }
  static MapSpec expanding(unsigned kappa);
  static MapSpec tent() { return {MapKind::tent, 2, 0}; }
  static MapSpec logistic() { return {MapKind::logistic, 2, 0}; }
  static MapSpec baker() { return {MapKind::baker, 2, 0}; }
  static MapSpec rotation(double alpha);
  // "doubling", "expand:3", "tent", "logistic", "baker", "rot:0.6180339887"
  static MapSpec parse(std::string_view text);

  // Size of the symbolic alphabet of the map's Markov partition.
  unsigned alphabet() const { return kind == MapKind::expanding ? kappa : 2; }
  std::string str() const;
};

// Element I_{i,N} of the level-N Markov partition, 1 <= index <= kappa^N.
struct MarkovCylinder {
  std::size_t level = 1;
  std::uint64_t index = 1;
};

// Baker's-map rectangle I_{i,N} x I_{j,M}.
struct BakerRect {
  std::size_t x_level = 1;  // N
  std::size_t y_level = 1;  // M
  std::uint64_t i = 1;
  std::uint64_t j = 1;
};

using HoleSpec = std::variant<MarkovCylinder, Interval, IntervalUnion, BakerRect>;

// "markov:N:i", "interval:a/b:c/d", "union:a:b,c:d,...", "rect:N:M:i:j"
HoleSpec parse_hole(std::string_view text);
std::string to_string(const HoleSpec& hole);

class NonMarkovHoleError : public Error {
 public:
  using Error::Error;
};

// The hole as a subset of [0,1) in the piecewise-linear coordinate. For the
// logistic map this is the tent coordinate x = (2/pi) asin(sqrt(y)), so
// interval endpoints must be 0, 1/2 or 1. Not defined for baker rectangles.
IntervalUnion hole_intervals(const MapSpec& map, const HoleSpec& hole);

// Forbidden words whose cylinders make up the hole under the map's coding.
PatternSet code_hole(const MapSpec& map, const HoleSpec& hole);

// Itinerary s_n = [T^n x >= 1/2] of the tent map, shared by every interior
// point of a dyadic cell of level >= length.
Word tent_itinerary(const Interval& cell, std::size_t length);

// Piecewise-linear dynamics on exact interval unions (doubling, expanding,
// tent).
IntervalUnion image(const MapSpec& map, const IntervalUnion& set);
IntervalUnion preimage(const MapSpec& map, const IntervalUnion& set);

// Least n >= 1 with lambda(T^n(A) intersect A) > 0, by exact set images.
std::size_t poincare_time(const MapSpec& map, const HoleSpec& hole);

enum class MeasureKind { lebesgue, arcsine };

struct MeasureValue {
  std::optional<Rational> exact;
  double value = 0;
};

// Lebesgue measure (exact; area for baker rectangles) or the arcsine
// measure with density 1/(pi sqrt(x(1-x))). Cylinders are read in base kappa.
MeasureValue measure(MeasureKind kind, const HoleSpec& hole, unsigned kappa = 2);
double arcsine_measure(double a, double b);

// y-endpoints sin^2(pi x / 2) of the logistic cell conjugate to tent cell I_{i,N}.
struct RealInterval {
  double lo = 0;
  double hi = 0;
};
RealInterval logistic_cell(std::size_t level, std::uint64_t index);

// Omega_depth(A) = union of T^{-j}(A), j = 0..depth.
IntervalUnion preimage_union(const MapSpec& map, const HoleSpec& hole, std::size_t depth);

struct BigHole {
  IntervalUnion hole;
  Word base_word;  // codes the base Markov hole I_{index, level}
  std::size_t level = 0;
  std::uint64_t index = 1;
  std::size_t depth = 0;
  Rational measure;
  double rho_base = 0;
  double rho_union = 0;
};

// A hole of Lebesgue measure > 1 - eps with escape rate < r for the
// doubling map: preimages of the fixed-point cylinder I_{1,N}.
BigHole big_hole_small_rate(double eps, double r, std::size_t max_level = 48, std::size_t max_depth = 4096);

// Survival probabilities of a baker rectangle for n = 0..horizon, computed
// on a 2-D grid of dyadic rectangles by iterating the actual map.
std::vector<Rational> baker_survival_geometric(const BakerRect& rect, std::size_t horizon);

// Rigorous escape-rate bounds for an interval that is not a Markov hole:
// the level-K dyadic cells inside A and the cells meeting A give holes
// inner <= A <= outer, so rho(inner) <= rho(A) <= rho(outer).
struct EscapeBracket {
  Interval hole;
  std::size_t level = 0;
  IntervalUnion inner;
  IntervalUnion outer;
  double rho_inner = 0;  // 0 when no cell fits inside A
  double rho_outer = 0;
};

EscapeBracket bracket_escape(const Interval& hole, std::size_t level);

}  // namespace escapelab
