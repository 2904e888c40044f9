#include "escapelab/maps.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "escapelab/spectral.hpp"

namespace escapelab {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view s, const char* what) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(std::string(s), &used);
    if (used != s.size()) throw Error("");
    return v;
  } catch (const std::exception&) {
    throw Error(std::string("malformed ") + what + " '" + std::string(s) + "'");
  }
}

Interval checked_interval(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw Error("interval needs lo < hi");
  if (lo < 0 || hi > 1) throw Error("interval must lie in [0, 1]");
  return {lo, hi};
}

Interval cylinder_interval(const MarkovCylinder& c, unsigned kappa) {
  const BigInt cells = ipow(kappa, c.level);
  if (c.level == 0 || c.index < 1 || BigInt(static_cast<unsigned long>(c.index)) > cells)
    throw Error("Markov cylinder index out of range");
  Rational lo(BigInt(static_cast<unsigned long>(c.index - 1)), cells);
  Rational hi(BigInt(static_cast<unsigned long>(c.index)), cells);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

bool is_piecewise_linear(MapKind k) {
  return k == MapKind::doubling || k == MapKind::expanding || k == MapKind::tent || k == MapKind::logistic;
}

void require_piecewise_linear(const MapSpec& map, const char* what) {
  if (!is_piecewise_linear(map.kind))
    throw Error(std::string(what) + " is defined for one-dimensional expanding maps, not " + map.str());
}

// Logistic y in {0, 1/2, 1} are the only rationals whose tent coordinate
// (2/pi) asin(sqrt(y)) is rational.
Rational logistic_to_tent(const Rational& y) {
  if (y == 0 || y == 1) return y;
  if (y == Rational(1, 2)) return y;
  throw NonMarkovHoleError("logistic interval endpoint " + to_string(y) +
                           " is not conjugate to a dyadic point; use markov:N:i holes");
}

struct Rect {
  Rational x0, x1, y0, y1;
};

void baker_image(const Rect& r, std::vector<Rect>& out) {
  const Rational half(1, 2);
  if (r.x1 <= half) {
    out.push_back({2 * r.x0, 2 * r.x1, r.y0 / 2, r.y1 / 2});
  } else if (r.x0 >= half) {
    out.push_back({2 * r.x0 - 1, 2 * r.x1 - 1, (r.y0 + 1) / 2, (r.y1 + 1) / 2});
  } else {
    baker_image({r.x0, half, r.y0, r.y1}, out);
    baker_image({half, r.x1, r.y0, r.y1}, out);
  }
}

bool overlaps(const Rect& a, const Rect& b) {
  auto lo_x = a.x0 > b.x0 ? a.x0 : b.x0;
  auto hi_x = a.x1 < b.x1 ? a.x1 : b.x1;
  auto lo_y = a.y0 > b.y0 ? a.y0 : b.y0;
  auto hi_y = a.y1 < b.y1 ? a.y1 : b.y1;
  return lo_x < hi_x && lo_y < hi_y;
}

void check_rect(const BakerRect& r) {
  if (r.x_level == 0 || r.y_level == 0) throw Error("baker rectangle levels must be >= 1");
  if (r.i < 1 || r.i > (std::uint64_t{1} << r.x_level) || r.j < 1 || r.j > (std::uint64_t{1} << r.y_level))
    throw Error("baker rectangle index out of range");
}

std::size_t baker_poincare_time(const BakerRect& br) {
  check_rect(br);
  Interval x = cylinder_interval({br.x_level, br.i}, 2);
  Interval y = cylinder_interval({br.y_level, br.j}, 2);
  const Rect hole{x.lo, x.hi, y.lo, y.hi};
  std::vector<Rect> current{hole};
  const std::size_t cap = 4 * (br.x_level + br.y_level);
  for (std::size_t n = 1; n <= cap; ++n) {
    std::vector<Rect> next;
    for (const auto& r : current) baker_image(r, next);
    current = std::move(next);
    for (const auto& r : current)
      if (overlaps(r, hole)) return n;
  }
  throw Error("baker recurrence time exceeds cap " + std::to_string(cap));
}

}  // namespace

MapSpec MapSpec::expanding(unsigned kappa) {
  if (kappa < 2 || kappa > 36) throw Error("expanding map needs integer kappa in [2, 36]");
  return {kappa == 2 ? MapKind::doubling : MapKind::expanding, kappa, 0};
}

MapSpec MapSpec::rotation(double alpha) {
  if (!(alpha > 0 && alpha < 1)) throw Error("rotation angle must lie in (0, 1)");
  return {MapKind::rotation, 2, alpha};
}

MapSpec MapSpec::parse(std::string_view text) {
  if (text == "doubling") return doubling();
  if (text == "tent") return tent();
  if (text == "logistic") return logistic();
  if (text == "baker") return baker();
  if (text.starts_with("expand:")) return expanding(static_cast<unsigned>(parse_uint(text.substr(7), "kappa")));
  if (text.starts_with("rot:")) {
    try {
      return rotation(std::stod(std::string(text.substr(4))));
    } catch (const std::invalid_argument&) {
      throw Error("malformed rotation angle in '" + std::string(text) + "'");
    }
  }
  throw Error("unknown map '" + std::string(text) + "'");
}

std::string MapSpec::str() const {
  switch (kind) {
    case MapKind::doubling:
      return "doubling";
    case MapKind::expanding:
      return "expand:" + std::to_string(kappa);
    case MapKind::tent:
      return "tent";
    case MapKind::logistic:
      return "logistic";
    case MapKind::baker:
      return "baker";
    case MapKind::rotation: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "rot:%.12g", alpha);
      return buf;
    }
  }
  return "unknown";
}

HoleSpec parse_hole(std::string_view text) {
  auto fields = split(text, ':');
  const std::string_view kind = fields.front();
  if (kind == "markov" && fields.size() == 3)
    return MarkovCylinder{parse_uint(fields[1], "level"), parse_uint(fields[2], "index")};
  if (kind == "interval" && fields.size() == 3)
    return checked_interval(parse_rational(fields[1]), parse_rational(fields[2]));
  if (kind == "rect" && fields.size() == 5) {
    BakerRect r{parse_uint(fields[1], "level"), parse_uint(fields[2], "level"), parse_uint(fields[3], "index"),
                parse_uint(fields[4], "index")};
    check_rect(r);
    return r;
  }
  if (kind == "union" && fields.size() >= 2) {
    std::string_view body = text.substr(6);
    std::vector<Interval> parts;
    for (auto piece : split(body, ',')) {
      auto ends = split(piece, ':');
      if (ends.size() != 2) throw Error("malformed union member '" + std::string(piece) + "'");
      parts.push_back(checked_interval(parse_rational(ends[0]), parse_rational(ends[1])));
    }
    return IntervalUnion(std::move(parts));
  }
  throw Error("malformed hole literal '" + std::string(text) + "'");
}

std::string to_string(const HoleSpec& hole) {
  struct Visitor {
    std::string operator()(const MarkovCylinder& c) const {
      return "markov:" + std::to_string(c.level) + ":" + std::to_string(c.index);
    }
    std::string operator()(const Interval& i) const {
      return "interval:" + to_string(i.lo) + ":" + to_string(i.hi);
    }
    std::string operator()(const IntervalUnion& u) const {
      std::string out = "union:";
      for (std::size_t k = 0; k < u.parts().size(); ++k) {
        if (k) out += ",";
        out += to_string(u.parts()[k].lo) + ":" + to_string(u.parts()[k].hi);
      }
      return out;
    }
    std::string operator()(const BakerRect& r) const {
      return "rect:" + std::to_string(r.x_level) + ":" + std::to_string(r.y_level) + ":" + std::to_string(r.i) +
             ":" + std::to_string(r.j);
    }
  };
  return std::visit(Visitor{}, hole);
}

IntervalUnion hole_intervals(const MapSpec& map, const HoleSpec& hole) {
  if (std::holds_alternative<BakerRect>(hole)) throw Error("baker rectangles are not interval holes");
  const unsigned kappa = map.alphabet();
  if (auto c = std::get_if<MarkovCylinder>(&hole)) return IntervalUnion({cylinder_interval(*c, kappa)});
  IntervalUnion u = std::holds_alternative<Interval>(hole) ? IntervalUnion({std::get<Interval>(hole)})
                                                           : std::get<IntervalUnion>(hole);
  if (map.kind != MapKind::logistic) return u;
  std::vector<Interval> parts;
  for (const auto& p : u.parts()) parts.push_back({logistic_to_tent(p.lo), logistic_to_tent(p.hi)});
  return IntervalUnion(std::move(parts));
}

Word tent_itinerary(const Interval& cell, std::size_t length) {
  Rational x = (cell.lo + cell.hi) / 2;
  const Rational half(1, 2);
  std::vector<Word::Symbol> s(length);
  for (std::size_t k = 0; k < length; ++k) {
    if (x >= half) {
      s[k] = 1;
      x = 2 - 2 * x;
    } else {
      s[k] = 0;
      x = 2 * x;
    }
  }
  return Word(std::move(s), 2);
}

PatternSet code_hole(const MapSpec& map, const HoleSpec& hole) {
  if (map.kind == MapKind::baker) {
    const auto* r = std::get_if<BakerRect>(&hole);
    if (!r) throw Error("the baker map takes rect:N:M:i:j holes");
    check_rect(*r);
    // Two-sided coding: y-digits sit left of the origin, nearest first.
    Word x_code = Word::from_index(r->i - 1, r->x_level);
    Word y_code = Word::from_index(r->j - 1, r->y_level);
    return PatternSet::single(y_code.reversed() + x_code);
  }
  if (map.kind == MapKind::rotation)
    throw NonMarkovHoleError("circle rotations have no finite Markov partition; use rotation_escape");

  const unsigned kappa = map.alphabet();
  const IntervalUnion u = hole_intervals(map, hole);
  if (u.empty()) throw Error("empty hole");
  std::size_t level = 0;
  for (const auto& p : u.parts()) {
    for (const Rational* end : {&p.lo, &p.hi}) {
      auto l = adic_level(*end, kappa);
      if (!l)
        throw NonMarkovHoleError("hole endpoint " + to_string(*end) + " is not a " + std::to_string(kappa) +
                                 "-adic rational; bracket it between Markov holes or use Monte Carlo");
      level = std::max<std::size_t>(level, *l);
    }
  }
  level = std::max<std::size_t>(level, 1);
  const BigInt cells = ipow(kappa, level);
  if (u.measure() == 1) throw Error("hole covers the whole space");
  if (cells > BigInt(static_cast<unsigned long>(kMaxNormalizedPatterns)))
    throw Error("hole resolution too fine to code (level " + std::to_string(level) + ")");

  std::vector<Word> words;
  const bool tent_coded = map.kind == MapKind::tent || map.kind == MapKind::logistic;
  for (const auto& p : u.parts()) {
    const std::uint64_t first = Rational(p.lo * cells).get_num().get_ui();
    const std::uint64_t last = Rational(p.hi * cells).get_num().get_ui();
    for (std::uint64_t c = first; c < last; ++c) {
      if (tent_coded) {
        Rational lo(BigInt(static_cast<unsigned long>(c)), cells), hi(BigInt(static_cast<unsigned long>(c + 1)), cells);
        lo.canonicalize();
        hi.canonicalize();
        words.push_back(tent_itinerary({lo, hi}, level));
      } else {
        words.push_back(Word::from_index(c, level, kappa));
      }
    }
  }
  return PatternSet(std::move(words));
}

IntervalUnion image(const MapSpec& map, const IntervalUnion& set) {
  require_piecewise_linear(map, "image");
  std::vector<Interval> out;
  if (map.kind == MapKind::tent || map.kind == MapKind::logistic) {
    const Rational half(1, 2);
    for (const auto& p : set.parts()) {
      if (p.lo < half) out.push_back({2 * p.lo, 2 * (p.hi < half ? p.hi : half)});
      if (p.hi > half) {
        Rational lo = p.lo > half ? p.lo : half;
        out.push_back({2 - 2 * p.hi, 2 - 2 * lo});
      }
    }
    return IntervalUnion(std::move(out));
  }
  const long k = static_cast<long>(map.kappa);
  for (const auto& p : set.parts()) {
    for (long j = 0; j < k; ++j) {
      Rational a(j, k), b(j + 1, k);
      a.canonicalize();
      b.canonicalize();
      Rational lo = p.lo > a ? p.lo : a;
      Rational hi = p.hi < b ? p.hi : b;
      if (lo < hi) out.push_back({k * lo - j, k * hi - j});
    }
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion preimage(const MapSpec& map, const IntervalUnion& set) {
  require_piecewise_linear(map, "preimage");
  std::vector<Interval> out;
  if (map.kind == MapKind::tent || map.kind == MapKind::logistic) {
    for (const auto& p : set.parts()) {
      out.push_back({p.lo / 2, p.hi / 2});
      out.push_back({1 - p.hi / 2, 1 - p.lo / 2});
    }
    return IntervalUnion(std::move(out));
  }
  const long k = static_cast<long>(map.kappa);
  for (const auto& p : set.parts())
    for (long j = 0; j < k; ++j) out.push_back({(p.lo + j) / k, (p.hi + j) / k});
  return IntervalUnion(std::move(out));
}

std::size_t poincare_time(const MapSpec& map, const HoleSpec& hole) {
  if (map.kind == MapKind::baker) {
    const auto* r = std::get_if<BakerRect>(&hole);
    if (!r) throw Error("the baker map takes rect:N:M:i:j holes");
    return baker_poincare_time(*r);
  }
  require_piecewise_linear(map, "poincare_time");
  const IntervalUnion a = hole_intervals(map, hole);
  if (a.empty()) throw Error("poincare_time needs a hole of positive measure");
  std::size_t level = 0;
  bool adic = true;
  for (const auto& p : a.parts()) {
    for (const Rational* end : {&p.lo, &p.hi}) {
      if (auto l = adic_level(*end, map.alphabet())) level = std::max<std::size_t>(level, *l);
      else adic = false;
    }
  }
  const std::size_t cap = adic ? 4 * std::max<std::size_t>(level, 1) : 256;
  IntervalUnion current = a;
  for (std::size_t n = 1; n <= cap; ++n) {
    current = image(map, current);
    if (current.intersect(a).measure() > 0) return n;
  }
  throw Error("no return of " + to_string(hole) + " within " + std::to_string(cap) + " steps");
}

double arcsine_measure(double a, double b) {
  return 2.0 / std::numbers::pi * (std::asin(std::sqrt(b)) - std::asin(std::sqrt(a)));
}

RealInterval logistic_cell(std::size_t level, std::uint64_t index) {
  const double cells = std::ldexp(1.0, static_cast<int>(level));
  if (level == 0 || index < 1 || static_cast<double>(index) > cells) throw Error("logistic cell index out of range");
  auto y = [&](double k) {
    double s = std::sin(std::numbers::pi * k / (2.0 * cells));
    return s * s;
  };
  return {y(static_cast<double>(index - 1)), y(static_cast<double>(index))};
}

MeasureValue measure(MeasureKind kind, const HoleSpec& hole, unsigned kappa) {
  MeasureValue v;
  if (kind == MeasureKind::lebesgue) {
    Rational exact;
    if (auto c = std::get_if<MarkovCylinder>(&hole)) exact = cylinder_interval(*c, kappa).length();
    else if (auto i = std::get_if<Interval>(&hole)) exact = i->length();
    else if (auto u = std::get_if<IntervalUnion>(&hole)) exact = u->measure();
    else {
      const auto& r = std::get<BakerRect>(hole);
      check_rect(r);
      exact = rpow(2, -static_cast<long>(r.x_level + r.y_level));
    }
    v.value = to_double(exact);
    v.exact = std::move(exact);
    return v;
  }
  if (std::holds_alternative<BakerRect>(hole)) throw Error("arcsine measure is one-dimensional");
  if (auto c = std::get_if<MarkovCylinder>(&hole)) {
    if (kappa != 2) throw Error("arcsine cells are defined for the binary partition");
    RealInterval y = logistic_cell(c->level, c->index);
    v.value = arcsine_measure(y.lo, y.hi);
    return v;
  }
  IntervalUnion u = std::holds_alternative<Interval>(hole) ? IntervalUnion({std::get<Interval>(hole)})
                                                           : std::get<IntervalUnion>(hole);
  for (const auto& p : u.parts()) v.value += arcsine_measure(to_double(p.lo), to_double(p.hi));
  return v;
}

IntervalUnion preimage_union(const MapSpec& map, const HoleSpec& hole, std::size_t depth) {
  require_piecewise_linear(map, "preimage_union");
  const IntervalUnion a = hole_intervals(map, hole);
  IntervalUnion omega = a;
  for (std::size_t k = 1; k <= depth; ++k) omega = a.unite(preimage(map, omega));
  return omega;
}

BigHole big_hole_small_rate(double eps, double r, std::size_t max_level, std::size_t max_depth) {
  if (!(eps > 0 && eps < 1)) throw Error("eps must lie in (0, 1)");
  if (!(r > 0)) throw Error("rate bound must be positive");
  BigHole out;
  bool found = false;
  for (std::size_t n = 1; n <= max_level && !found; ++n) {
    Word w = Word::repeat(0, n);
    double rho = rho_from_gap(theta_root(w).gap, 2);
    if (rho < r) {
      out.level = n;
      out.base_word = w;
      out.rho_base = rho;
      found = true;
    }
  }
  if (!found) throw Error("no fixed-point cylinder up to level " + std::to_string(max_level) + " has rate below r");

  const PatternSet base = PatternSet::single(out.base_word);
  const Rational target(eps);  // exact binary value of the double
  std::size_t depth = 0;
  bool reached = false;
  Rational survival;
  for (std::size_t horizon = 16; !reached; horizon *= 2) {
    horizon = std::min(horizon, max_depth);
    SurvivalSeries s = survival_series(base, horizon);
    for (std::size_t k = 0; k <= horizon; ++k) {
      if (s.measures[k] < target) {
        depth = k;
        survival = s.measures[k];
        reached = true;
        break;
      }
    }
    if (!reached && horizon == max_depth)
      throw Error("survival stays above eps up to depth " + std::to_string(max_depth));
  }

  out.depth = depth;
  // The union's pieces are level-(N + depth) cells; past 2^24 of them the
  // exact representation is no longer practical.
  if (out.level + depth > 24)
    throw Error("reaching measure > 1 - eps needs " + std::to_string(depth) + " preimages of I_{1," +
                std::to_string(out.level) + "}; the exact union would be too fragmented to build");
  out.hole = preimage_union(MapSpec::doubling(), MarkovCylinder{out.level, 1}, depth);
  out.measure = out.hole.measure();
  if (out.measure != 1 - survival) throw Error("preimage union measure disagrees with the survival series");
  if (out.level + depth <= 20) out.rho_union = escape_rate(code_hole(MapSpec::doubling(), out.hole)).rho;
  else out.rho_union = std::nan("");
  return out;
}

std::vector<Rational> baker_survival_geometric(const BakerRect& rect, std::size_t horizon) {
  check_rect(rect);
  const std::size_t X = rect.x_level + horizon;
  const std::size_t Y = rect.y_level;
  if (X + Y > 26) throw Error("baker grid too large for geometric survival");
  const std::uint64_t x_cells = std::uint64_t{1} << X;
  const std::uint64_t y_cells = std::uint64_t{1} << Y;
  const std::uint64_t total = x_cells * y_cells;
  const std::size_t shift = X - rect.x_level;

  std::vector<std::uint8_t> outside(total), alive(total), next(total);
  for (std::uint64_t xi = 0; xi < x_cells; ++xi)
    for (std::uint64_t yj = 0; yj < y_cells; ++yj)
      outside[xi * y_cells + yj] = !((xi >> shift) == rect.i - 1 && yj == rect.j - 1);
  alive = outside;

  auto fraction = [&](const std::vector<std::uint8_t>& s) {
    std::uint64_t n = 0;
    for (auto b : s) n += b;
    Rational r(BigInt(static_cast<unsigned long>(n)), BigInt(static_cast<unsigned long>(total)));
    r.canonicalize();
    return r;
  };
  std::vector<Rational> out{fraction(alive)};
  const std::uint64_t half_x = x_cells >> 1;
  for (std::size_t k = 1; k <= horizon; ++k) {
    for (std::uint64_t xi = 0; xi < x_cells; ++xi) {
      const std::uint64_t bit = xi >= half_x ? 1 : 0;
      const std::uint64_t image_x = (xi - bit * half_x) << 1;
      for (std::uint64_t yj = 0; yj < y_cells; ++yj) {
        const std::uint64_t image_y = (bit * y_cells + yj) >> 1;
        const std::uint64_t c = xi * y_cells + yj;
        next[c] = outside[c] && alive[image_x * y_cells + image_y];
      }
    }
    std::swap(alive, next);
    out.push_back(fraction(alive));
  }
  return out;
}

EscapeBracket bracket_escape(const Interval& hole, std::size_t level) {
  checked_interval(hole.lo, hole.hi);
  if (level == 0 || level > 20) throw Error("bracketing level must lie in [1, 20]");
  const BigInt cells = ipow(2, level);
  BigInt lo_floor = Rational(hole.lo * cells).get_num() / Rational(hole.lo * cells).get_den();
  Rational hi_scaled = hole.hi * cells;
  BigInt hi_ceil = hi_scaled.get_num() / hi_scaled.get_den();
  if (hi_ceil * hi_scaled.get_den() != hi_scaled.get_num()) hi_ceil += 1;
  Rational lo_scaled = hole.lo * cells;
  BigInt lo_ceil = lo_floor;
  if (lo_ceil * lo_scaled.get_den() != lo_scaled.get_num()) lo_ceil += 1;
  BigInt hi_floor = hi_scaled.get_num() / hi_scaled.get_den();

  auto cell_union = [&](const BigInt& a, const BigInt& b) {
    if (a >= b) return IntervalUnion();
    Rational lo(a, cells), hi(b, cells);
    lo.canonicalize();
    hi.canonicalize();
    return IntervalUnion({Interval{lo, hi}});
  };
  auto rate = [](const IntervalUnion& u) {
    if (u.empty()) return 0.0;
    if (u.measure() == 1) return std::numeric_limits<double>::infinity();
    return escape_rate(code_hole(MapSpec::doubling(), u)).rho;
  };

  EscapeBracket out;
  out.hole = hole;
  out.level = level;
  out.inner = cell_union(lo_ceil, hi_floor);
  out.outer = cell_union(lo_floor, hi_ceil);
  out.rho_inner = rate(out.inner);
  out.rho_outer = rate(out.outer);
  return out;
}

}  // namespace escapelab
