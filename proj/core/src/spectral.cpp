#include "escapelab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "escapelab/parallel.hpp"

namespace escapelab {

Polynomial escape_denominator(const Word& w) {
  const Polynomial f = correlation_polynomial(w).as_polynomial();
  const Polynomial z_minus_m = Polynomial::from_ints({-static_cast<long>(w.alphabet()), 1});
  return Polynomial::constant(1) + z_minus_m * f;
}

Polynomial reduced_denominator(const Word& w) {
  const Polynomial denominator = escape_denominator(w);
  const Polynomial numerator = Polynomial::monomial(1, 1) * correlation_polynomial(w).as_polynomial();
  const Polynomial common = gcd(denominator, numerator);
  if (common.degree() <= 0) return denominator;
  return divmod(denominator, common).quotient;
}

RootTheta theta_root(const Word& w, unsigned bisection_bits) {
  const unsigned m = w.alphabet();
  const Polynomial denominator = escape_denominator(w);
  const Polynomial simple = square_free_part(reduced_denominator(w));
  const SturmSequence sturm(simple);

  Rational lo(0), hi(m);
  const Rational width_goal = rpow(2, -static_cast<long>(bisection_bits));
  if (sturm.count_roots(lo, hi) < 1)
    throw Error("no growth root in (0, " + std::to_string(m) + "] for word " + w.str());

  // Largest root stays in (lo, hi]: count(lo, m] >= 1 and count(hi, m] == 0.
  const Rational top(m);
  bool exact = false;
  bool isolated = false;
  int hi_sign = 0;
  while (hi - lo > width_goal) {
    Rational mid = (lo + hi) / 2;
    if (!isolated) {
      if (sturm.count_roots(mid, top) >= 1) lo = mid;
      else hi = mid;
      if (sturm.count_roots(lo, hi) == 1 && simple.sign_at(lo) != 0) {
        hi_sign = simple.sign_at(hi);
        if (hi_sign == 0) {
          lo = hi;
          exact = true;
          break;
        }
        isolated = true;
      }
      continue;
    }
    int s = simple.sign_at(mid);
    if (s == 0) {
      lo = hi = mid;
      exact = true;
      break;
    }
    if (s == hi_sign) hi = mid;
    else lo = mid;
  }

  RootTheta r;
  r.lower = lo;
  r.upper = hi;
  const Rational centre = exact ? hi : Rational((lo + hi) / 2);
  r.theta = to_double(centre);
  r.gap = to_double(Rational(top - centre));
  if (exact) {
    r.simple = denominator.derivative().sign_at(centre) != 0;
  } else {
    r.simple = denominator.sign_at(lo) * denominator.sign_at(hi) < 0;
  }
  return r;
}

namespace {

// Iterative Tarjan over the live-state graph.
std::vector<std::vector<std::uint32_t>> strongly_connected_components(
    const std::vector<std::vector<std::uint32_t>>& adj) {
  const std::size_t n = adj.size();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::vector<std::uint32_t>> components;
  std::uint32_t counter = 0;

  struct Frame {
    std::uint32_t v;
    std::size_t edge;
  };
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < adj[f.v].size()) {
        std::uint32_t t = adj[f.v][f.edge++];
        if (index[t] == kUnvisited) {
          index[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = 1;
          call.push_back({t, 0});
        } else if (on_stack[t]) {
          low[f.v] = std::min(low[f.v], index[t]);
        }
        continue;
      }
      const std::uint32_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::uint32_t> comp;
        std::uint32_t x;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[x] = 0;
          comp.push_back(x);
        } while (x != v);
        components.push_back(std::move(comp));
      }
    }
  }
  return components;
}

}  // namespace

MatrixTheta theta_matrix(const AvoidanceAutomaton& automaton, double rel_tol) {
  const std::size_t n = automaton.states();
  const unsigned m = automaton.alphabet();
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t s = 0; s < n; ++s)
    for (unsigned a = 0; a < m; ++a)
      if (auto t = automaton.next(s, a); t != AvoidanceAutomaton::kDead) adj[s].push_back(t);

  MatrixTheta best;
  std::vector<std::uint32_t> local(n, 0);
  std::vector<char> member(n, 0);
  for (const auto& comp : strongly_connected_components(adj)) {
    for (std::uint32_t k = 0; k < comp.size(); ++k) {
      local[comp[k]] = k;
      member[comp[k]] = 1;
    }
    // Edges inside the component, as (from, to) pairs in local numbering.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t s : comp)
      for (std::uint32_t t : adj[s])
        if (member[t]) edges.emplace_back(local[s], local[t]);
    for (std::uint32_t s : comp) member[s] = 0;
    if (edges.empty()) continue;

    // Power iteration on the primitive matrix A + I; the ratios (Bv)_i / v_i
    // bracket its spectral radius.
    const std::size_t k = comp.size();
    std::vector<double> v(k, 1.0), w(k);
    double lo = 0, hi = 0;
    double best_width = std::numeric_limits<double>::infinity();
    std::size_t since_improvement = 0;
    std::size_t it = 0;
    for (; it < 2'000'000; ++it) {
      w = v;
      for (const auto& [from, to] : edges) w[from] += v[to];
      lo = std::numeric_limits<double>::infinity();
      hi = 0;
      for (std::size_t i = 0; i < k; ++i) {
        double r = w[i] / v[i];
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      const double width = hi - lo;
      if (width <= rel_tol * hi) break;
      if (width < best_width) {
        best_width = width;
        since_improvement = 0;
      } else if (++since_improvement > 5000) {
        break;
      }
      for (std::size_t i = 0; i < k; ++i) v[i] = w[i] / hi;
    }
    const double radius = 0.5 * (lo + hi) - 1.0;
    if (radius > best.theta) {
      best.theta = radius;
      best.lower = lo - 1.0;
      best.upper = hi - 1.0;
    }
    best.iterations += it;
  }
  return best;
}

MatrixTheta theta_matrix(const PatternSet& p, double rel_tol) {
  return theta_matrix(AvoidanceAutomaton(p), rel_tol);
}

double theta(const Word& w, double tolerance) {
  const RootTheta root = theta_root(w);
  const MatrixTheta matrix = theta_matrix(PatternSet::single(w));
  if (std::abs(root.theta - matrix.theta) > tolerance)
    throw Error("theta engines disagree for " + w.str() + ": root " + std::to_string(root.theta) +
                ", matrix " + std::to_string(matrix.theta));
  return root.theta;
}

double rho_from_gap(double gap, unsigned alphabet) {
  const double m = static_cast<double>(alphabet);
  if (gap >= m) return std::numeric_limits<double>::infinity();
  return -std::log1p(-gap / m);
}

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::root:
      return "root";
    case Engine::matrix:
      return "matrix";
    case Engine::fit:
      return "fit";
  }
  return "unknown";
}

EscapeReport escape_rate(const PatternSet& p, double tolerance) {
  EscapeReport r;
  r.alphabet = p.alphabet();
  r.pattern_length = p.length();
  r.pattern_count = p.size();
  r.hole_measure = p.measure();
  r.tolerance = tolerance;
  r.tau = recurrence_time(p);

  const MatrixTheta matrix = theta_matrix(p);
  r.theta_matrix = matrix.theta;
  double gap = static_cast<double>(p.alphabet()) - matrix.theta;
  r.theta = matrix.theta;
  r.engine = Engine::matrix;
  if (p.is_single()) {
    const Word& w = p.patterns().front();
    const RootTheta root = theta_root(w);
    r.theta_root = root.theta;
    r.theta = root.theta;
    gap = root.gap;
    r.engine = Engine::root;
    r.corr_number = correlation_number(w);
    r.engines_agree = std::abs(root.theta - matrix.theta) <= tolerance;
  }
  r.rho = rho_from_gap(gap, p.alphabet());
  return r;
}

RootTheta ThetaCache::get(const Word& w) {
  auto key = std::make_pair(w.alphabet(), autocorrelation(w).bits);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  RootTheta r = theta_root(w);
  std::lock_guard lock(mutex_);
  cache_.emplace(std::move(key), r);
  return r;
}

std::size_t ThetaCache::size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

HoleComparison compare_holes(const Word& w, const Word& u) {
  if (w.size() != u.size()) throw Error("compare_holes needs words of equal length");
  if (w.alphabet() != u.alphabet()) throw Error("compare_holes needs words over one alphabet");
  HoleComparison c;
  const Correlation cw = autocorrelation(w), cu = autocorrelation(u);
  c.tau_w = recurrence_time(cw);
  c.tau_u = recurrence_time(cu);
  const RootTheta tw = theta_root(w), tu = theta_root(u);
  c.rho_w = rho_from_gap(tw.gap, w.alphabet());
  c.rho_u = rho_from_gap(tu.gap, u.alphabet());
  const std::size_t diff = first_difference(cw, cu);
  if (diff == 0) return c;

  c.threshold = w.size() + diff - 1;
  c.survival_crossover = diff - 1;
  if (tw.upper < tu.lower) c.order = -1;
  else if (tu.upper < tw.lower) c.order = 1;
  else {
    // Brackets overlap: settle the order with exact counts far past the threshold.
    const std::size_t n = *c.threshold + 256;
    const BigInt a = count_avoiding(PatternSet::single(w), n);
    const BigInt b = count_avoiding(PatternSet::single(u), n);
    c.order = a > b ? 1 : (a < b ? -1 : 0);
  }
  return c;
}

double asymptotic_escape(const Word& w) {
  const BigInt f = correlation_polynomial(w).evaluate(w.alphabet());
  return 1.0 / (static_cast<double>(w.alphabet()) * to_double(f));
}

Point Point::rational(const Rational& x) {
  if (x < 0 || x > 1) throw Error("point " + escapelab::to_string(x) + " is outside [0, 1]");
  Point p;
  p.label_ = escapelab::to_string(x);
  p.exact_ = x;
  p.scaled_floor_ = [x](const BigInt& scale) {
    BigInt q;
    BigInt num = x.get_num() * scale;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    return q;
  };
  return p;
}

Point Point::sqrt2_minus_1() {
  Point p;
  p.label_ = "sqrt2-1";
  p.scaled_floor_ = [](const BigInt& scale) {
    BigInt s = 2 * scale * scale, root;
    mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
    return BigInt(root - scale);
  };
  return p;
}

Point Point::golden_conjugate() {
  Point p;
  p.label_ = "golden";
  p.scaled_floor_ = [](const BigInt& scale) {
    BigInt s = 5 * scale * scale, root, q;
    mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
    BigInt diff = root - scale;
    mpz_fdiv_q_2exp(q.get_mpz_t(), diff.get_mpz_t(), 1);
    return q;
  };
  return p;
}

Point Point::periodic(const Word& block) {
  const BigInt period = ipow(block.alphabet(), block.size()) - 1;
  BigInt value = 0;
  for (auto s : block.symbols()) value = value * block.alphabet() + s;
  Rational x(value, period);
  x.canonicalize();
  Point p = rational(x);
  p.label_ = "periodic:" + block.str();
  return p;
}

Point Point::parse(std::string_view text) {
  if (text == "sqrt2-1" || text == "sqrt2m1") return sqrt2_minus_1();
  if (text == "golden") return golden_conjugate();
  if (text.starts_with("periodic:")) return periodic(Word::parse(text.substr(9)));
  return rational(parse_rational(text));
}

double Point::approx() const {
  if (exact_) return to_double(*exact_);
  const BigInt scale = ipow(2, 60);
  return to_double(Rational(scaled_floor_(scale), scale));
}

std::uint64_t Point::cell_index(std::size_t level, unsigned alphabet, CellSide side) const {
  const BigInt cells = ipow(alphabet, level);
  const BigInt floor_index = scaled_floor_(cells);
  if (exact_) {
    const Rational& x = *exact_;
    if (x == 1) return BigInt(cells - 1).get_ui();
    const Rational scaled = x * Rational(cells);
    if (scaled.get_den() == 1 && x != 0) {
      switch (side) {
        case CellSide::right:
          return floor_index.get_ui();
        case CellSide::left:
          return BigInt(floor_index - 1).get_ui();
        case CellSide::unspecified:
          throw AmbiguousCellError("point " + label_ + " is an endpoint of level-" + std::to_string(level) +
                                   " cells; choose the left or right cell");
      }
    }
  }
  return floor_index.get_ui();
}

Word Point::cell_word(std::size_t level, unsigned alphabet, CellSide side) const {
  return Word::from_index(cell_index(level, alphabet, side), level, alphabet);
}

LocalEscape local_escape_ratio(const Point& x, std::size_t level, CellSide side, unsigned alphabet,
                               ThetaCache* cache) {
  if (level == 0) throw Error("local escape ratio needs level >= 1");
  LocalEscape r{x.cell_word(level, alphabet, side), 0, rpow(alphabet, -static_cast<long>(level)), 0};
  const RootTheta root = cache ? cache->get(r.word) : theta_root(r.word);
  r.rho = rho_from_gap(root.gap, alphabet);
  r.ratio = r.rho / to_double(r.measure);
  return r;
}

ScanRow scan_word(std::size_t level, std::uint64_t index, const Word& w, ThetaCache* cache) {
  ScanRow row;
  row.level = level;
  row.index = index;
  row.word = w;
  const Correlation c = autocorrelation(w);
  row.tau = recurrence_time(c);
  row.corr_number = c.number();
  const RootTheta root = cache ? cache->get(w) : theta_root(w);
  row.theta = root.theta;
  row.rho = rho_from_gap(root.gap, w.alphabet());
  row.rho_asymptotic = asymptotic_escape(w);
  return row;
}

std::vector<ScanRow> scan_level(std::size_t level, unsigned alphabet, ThetaCache* cache) {
  const std::uint64_t cells = ipow(alphabet, level).get_ui();
  ThetaCache local_cache;
  ThetaCache& c = cache ? *cache : local_cache;
  std::vector<std::optional<ScanRow>> rows(cells);
  parallel_for(cells, [&](std::size_t i) {
    rows[i] = scan_word(level, i + 1, Word::from_index(i, level, alphabet), &c);
  });
  std::vector<ScanRow> out;
  out.reserve(cells);
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

}  // namespace escapelab
