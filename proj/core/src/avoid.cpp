#include "escapelab/avoid.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace escapelab {

namespace {

std::uint64_t checked_power(unsigned base, std::size_t exponent, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t k = 0; k < exponent; ++k) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

}  // namespace

PatternSet::PatternSet(std::vector<Word> patterns) {
  if (patterns.empty()) throw Error("pattern set must be nonempty");
  alphabet_ = patterns.front().alphabet();
  for (const auto& p : patterns) {
    if (p.alphabet() != alphabet_) throw Error("patterns must share one alphabet");
    length_ = std::max(length_, p.size());
  }
  std::set<Word> normalized;
  for (const auto& p : patterns) {
    const std::size_t pad = length_ - p.size();
    const std::uint64_t extensions = checked_power(alphabet_, pad, kMaxNormalizedPatterns);
    if (extensions > kMaxNormalizedPatterns || normalized.size() + extensions > kMaxNormalizedPatterns)
      throw Error("pattern set too large after normalization");
    if (pad == 0) {
      normalized.insert(p);
      continue;
    }
    for (std::uint64_t e = 0; e < extensions; ++e) normalized.insert(p + Word::from_index(e, pad, alphabet_));
  }
  patterns_.assign(normalized.begin(), normalized.end());
}

PatternSet PatternSet::single(const Word& w) { return PatternSet(std::vector<Word>{w}); }

PatternSet PatternSet::parse(std::string_view text, unsigned alphabet) {
  std::vector<Word> words;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw Error("empty pattern in '" + std::string(text) + "'");
    words.push_back(Word::parse(item, alphabet));
    start = comma + 1;
  }
  return PatternSet(std::move(words));
}

Rational PatternSet::measure() const {
  Rational r(BigInt(static_cast<unsigned long>(patterns_.size())), ipow(alphabet_, length_));
  r.canonicalize();
  return r;
}

std::string PatternSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i) out.push_back(',');
    out += patterns_[i].str();
  }
  return out;
}

AvoidanceAutomaton::AvoidanceAutomaton(const PatternSet& patterns) : alphabet_(patterns.alphabet()) {
  const unsigned m = alphabet_;
  // Trie over all patterns; node 0 is the empty prefix.
  std::vector<std::uint32_t> go(m, kDead);
  std::vector<std::size_t> depth{0};
  std::vector<char> terminal{0};
  for (const auto& w : patterns.patterns()) {
    std::uint32_t node = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::size_t slot = node * m + w[i];
      if (go[slot] == kDead) {
        go[slot] = static_cast<std::uint32_t>(depth.size());
        depth.push_back(depth[node] + 1);
        terminal.push_back(0);
        go.resize(go.size() + m, kDead);
      }
      node = go[slot];
    }
    terminal[node] = 1;
  }

  // Breadth-first failure links turn the trie into a complete DFA.
  const std::size_t nodes = depth.size();
  std::vector<std::uint32_t> fail(nodes, 0);
  std::deque<std::uint32_t> queue;
  for (unsigned a = 0; a < m; ++a) {
    std::uint32_t& slot = go[a];
    if (slot == kDead) {
      slot = 0;
    } else {
      fail[slot] = 0;
      queue.push_back(slot);
    }
  }
  while (!queue.empty()) {
    std::uint32_t s = queue.front();
    queue.pop_front();
    if (terminal[fail[s]]) terminal[s] = 1;
    for (unsigned a = 0; a < m; ++a) {
      std::uint32_t& slot = go[s * m + a];
      if (slot == kDead) {
        slot = go[fail[s] * m + a];
      } else {
        fail[slot] = go[fail[s] * m + a];
        queue.push_back(slot);
      }
    }
  }

  // Drop matched states and renumber the live ones.
  std::vector<std::uint32_t> renumber(nodes, kDead);
  for (std::size_t s = 0; s < nodes; ++s) {
    if (!terminal[s]) {
      renumber[s] = static_cast<std::uint32_t>(depth_.size());
      depth_.push_back(depth[s]);
    }
  }
  if (depth_.empty()) throw Error("pattern set forbids the empty word");
  delta_.assign(depth_.size() * m, kDead);
  for (std::size_t s = 0; s < nodes; ++s) {
    if (terminal[s]) continue;
    for (unsigned a = 0; a < m; ++a) delta_[renumber[s] * m + a] = renumber[go[s * m + a]];
  }
}

std::vector<std::vector<std::uint32_t>> AvoidanceAutomaton::transfer_matrix() const {
  const std::size_t n = states();
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t s = 0; s < n; ++s)
    for (unsigned a = 0; a < alphabet_; ++a)
      if (auto target = next(static_cast<std::uint32_t>(s), a); target != kDead) ++t[s][target];
  return t;
}

std::vector<BigInt> AvoidanceAutomaton::count_series(std::size_t n_max) const {
  const std::size_t n = states();
  std::vector<BigInt> cur(n, 0), nxt(n, 0);
  cur[start()] = 1;
  std::vector<BigInt> out;
  out.reserve(n_max + 1);
  out.emplace_back(1);
  for (std::size_t step = 1; step <= n_max; ++step) {
    for (auto& v : nxt) v = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (cur[s] == 0) continue;
      for (unsigned a = 0; a < alphabet_; ++a) {
        auto t = next(static_cast<std::uint32_t>(s), a);
        if (t != kDead) nxt[t] += cur[s];
      }
    }
    std::swap(cur, nxt);
    BigInt total = 0;
    for (const auto& v : cur) total += v;
    out.push_back(std::move(total));
  }
  return out;
}

std::vector<BigInt> brute_force_series(const PatternSet& p, std::size_t n_max, OracleLimits limits) {
  const unsigned m = p.alphabet();
  if (checked_power(m, n_max, limits.max_words) > limits.max_words)
    throw OracleLimitError("enumeration oracle refuses length " + std::to_string(n_max) +
                           " (limit " + std::to_string(limits.max_words) + " words)");
  const std::size_t L = p.length();
  const std::uint64_t window_space = checked_power(m, L, limits.max_words);
  if (window_space > limits.max_words) throw OracleLimitError("pattern length too large for the oracle");

  std::vector<char> forbidden(window_space, 0);
  for (const auto& w : p.patterns()) forbidden[w.index()] = 1;

  std::vector<std::uint64_t> counts(n_max + 1, 0);
  // Depth-first walk over all words; a prefix that contains a pattern is
  // abandoned together with all its extensions.
  struct Frame {
    std::size_t depth;
    std::uint64_t window;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    ++counts[f.depth];
    if (f.depth == n_max) continue;
    for (unsigned a = 0; a < m; ++a) {
      std::uint64_t window = (f.window * m + a) % window_space;
      std::size_t d = f.depth + 1;
      if (d >= L && forbidden[window]) continue;
      stack.push_back({d, window});
    }
  }
  std::vector<BigInt> out;
  out.reserve(counts.size());
  for (auto c : counts) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

BigInt brute_force_count(const PatternSet& p, std::size_t n, OracleLimits limits) {
  return brute_force_series(p, n, limits).back();
}

BigInt count_avoiding(const PatternSet& p, std::size_t n) {
  return AvoidanceAutomaton(p).count_series(n).back();
}

std::vector<BigInt> count_avoiding_series(const PatternSet& p, std::size_t n_max) {
  return AvoidanceAutomaton(p).count_series(n_max);
}

std::vector<BigInt> gf_coefficients(const Word& w, std::size_t n_max) {
  // With t = 1/z, F = P(t)/Q(t), P(t) = sum b_i t^{i-1} and
  // Q(t) = t^k + (1 - m t) P(t); Q(0) = b_1 = 1.
  const Correlation corr = autocorrelation(w);
  const std::size_t k = w.size();
  const long m = static_cast<long>(w.alphabet());
  std::vector<BigInt> P(k + 1, 0), Q(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) P[i] = corr[i] ? 1 : 0;
  for (std::size_t i = 0; i <= k; ++i) {
    Q[i] = P[i];
    if (i > 0) Q[i] -= m * P[i - 1];
  }
  Q[k] += 1;

  std::vector<BigInt> c(n_max + 1, 0);
  for (std::size_t n = 0; n <= n_max; ++n) {
    BigInt v = n < P.size() ? P[n] : BigInt(0);
    for (std::size_t j = 1; j <= k && j <= n; ++j)
      if (Q[j] != 0) v -= Q[j] * c[n - j];
    c[n] = v;
  }
  return c;
}

BigInt SurvivalSeries::denominator(std::size_t n) const { return ipow(alphabet, n + pattern_length); }

SurvivalSeries survival_series(const PatternSet& p, std::size_t n_max) {
  SurvivalSeries s;
  s.pattern_length = p.length();
  s.alphabet = p.alphabet();
  auto counts = count_avoiding_series(p, n_max + p.length());
  s.counts.assign(counts.begin() + static_cast<std::ptrdiff_t>(p.length()), counts.end());
  s.measures.reserve(s.counts.size());
  for (std::size_t n = 0; n < s.counts.size(); ++n) {
    Rational r(s.counts[n], s.denominator(n));
    r.canonicalize();
    s.measures.push_back(std::move(r));
  }
  return s;
}

std::size_t dominance_threshold(const Word& w, const Word& u) {
  if (w.size() != u.size()) throw Error("dominance threshold needs words of equal length");
  std::size_t i = first_difference(autocorrelation(w), autocorrelation(u));
  if (i == 0) throw Error("words " + w.str() + " and " + u.str() + " have equal correlations; no threshold");
  return w.size() + i - 1;
}

std::size_t recurrence_time(const PatternSet& p) {
  const std::size_t L = p.length();
  const auto& pats = p.patterns();
  for (std::size_t n = 1; n < L; ++n) {
    // Suffixes of length L-n of the patterns against prefixes of length L-n.
    std::set<std::vector<Word::Symbol>> suffixes;
    for (const auto& w : pats) suffixes.emplace(w.symbols().begin() + static_cast<std::ptrdiff_t>(n), w.symbols().end());
    for (const auto& w : pats) {
      std::vector<Word::Symbol> pre(w.symbols().begin(), w.symbols().end() - static_cast<std::ptrdiff_t>(n));
      if (suffixes.count(pre)) return n;
    }
  }
  return L;
}

}  // namespace escapelab
