#include "escapelab/intervals.hpp"

#include <algorithm>

namespace escapelab {

IntervalUnion::IntervalUnion(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& i) { return i.hi <= i.lo; });
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (auto& p : parts) {
    if (!parts_.empty() && p.lo <= parts_.back().hi) {
      if (p.hi > parts_.back().hi) parts_.back().hi = p.hi;
    } else {
      parts_.push_back(std::move(p));
    }
  }
}

Rational IntervalUnion::measure() const {
  Rational total(0);
  for (const auto& p : parts_) total += p.length();
  return total;
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalUnion(std::move(all));
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const auto& a = parts_[i];
    const auto& b = other.parts_[j];
    Rational lo = a.lo > b.lo ? a.lo : b.lo;
    Rational hi = a.hi < b.hi ? a.hi : b.hi;
    if (lo < hi) out.push_back({lo, hi});
    if (a.hi < b.hi) ++i;
    else ++j;
  }
  return IntervalUnion(std::move(out));
}

bool IntervalUnion::contains(const Rational& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.lo <= x && x < i.hi; });
}

std::string IntervalUnion::str() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += " U ";
    out += "[" + to_string(parts_[k].lo) + "," + to_string(parts_[k].hi) + ")";
  }
  return out;
}

}  // namespace escapelab
