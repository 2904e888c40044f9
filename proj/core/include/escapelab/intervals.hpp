#pragma once

#include <string>
#include <vector>

#include "escapelab/numeric.hpp"

namespace escapelab {

// Half-open interval [lo, hi) with exact endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of half-open intervals, kept sorted, disjoint and merged.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<Interval> parts);
  static IntervalUnion unit() { return IntervalUnion({Interval{0, 1}}); }

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  Rational measure() const;

  IntervalUnion unite(const IntervalUnion& other) const;
  IntervalUnion intersect(const IntervalUnion& other) const;
  bool contains(const Rational& x) const;

  // "[0,1/4) U [1/2,5/8)"
  std::string str() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> parts_;
};

}  // namespace escapelab
