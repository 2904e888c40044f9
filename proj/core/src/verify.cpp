#include "escapelab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "escapelab/avoid.hpp"
#include "escapelab/maps.hpp"
#include "escapelab/parallel.hpp"
#include "escapelab/polynomial.hpp"
#include "escapelab/report.hpp"
#include "escapelab/simulate.hpp"
#include "escapelab/spectral.hpp"
#include "escapelab/words.hpp"

namespace escapelab {

namespace {

// Collects the first few failure messages of a suite.
class Failures {
 public:
  void add(const std::string& message) {
    if (count_++ < 5) messages_.push_back(message);
  }
  bool any() const { return count_ > 0; }
  std::string str() const {
    std::string out = std::to_string(count_) + " failure(s): ";
    for (std::size_t i = 0; i < messages_.size(); ++i) out += (i ? "; " : "") + messages_[i];
    return out;
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> messages_;
};

CheckResult finish(const Failures& f, const std::string& summary) {
  CheckResult r;
  r.passed = !f.any();
  r.detail = f.any() ? f.str() + " | " + summary : summary;
  return r;
}

Word random_word(std::mt19937_64& rng, std::size_t length) {
  std::vector<Word::Symbol> s(length);
  for (auto& x : s) x = static_cast<Word::Symbol>(rng() & 1);
  return Word(std::move(s), 2);
}

std::vector<Word> all_binary_words_up_to(std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_length; ++n)
    for (auto& w : all_words(n)) out.push_back(std::move(w));
  return out;
}

// 1. Automaton counts against full enumeration.
CheckResult suite_oracle(const VerifyOptions& opt) {
  constexpr std::size_t kMaxN = 18;
  const auto start = std::chrono::steady_clock::now();
  Failures f;
  std::size_t sets = 0;
  auto check = [&](std::vector<Word> words) {
    PatternSet p(std::move(words));
    if (p.length() > 6) return;
    ++sets;
    auto fast = count_avoiding_series(p, kMaxN);
    auto slow = brute_force_series(p, kMaxN);
    if (fast != slow) f.add("mismatch for {" + p.str() + "}");
  };

  // Every nonempty set of words of one length L <= 3.
  for (std::size_t len = 1; len <= 3; ++len) {
    auto words = all_words(len);
    const std::uint64_t subsets = std::uint64_t{1} << words.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      std::vector<Word> chosen;
      for (std::size_t i = 0; i < words.size(); ++i)
        if (mask >> i & 1) chosen.push_back(words[i]);
      check(std::move(chosen));
    }
  }
  // Every singleton and pair at L = 4..6.
  for (std::size_t len = 4; len <= 6; ++len) {
    auto words = all_words(len);
    for (std::size_t i = 0; i < words.size(); ++i) {
      check({words[i]});
      for (std::size_t j = i + 1; j < words.size(); ++j) check({words[i], words[j]});
    }
  }
  // Random sets, including mixed lengths that normalize to L <= 6.
  std::mt19937_64 rng(opt.seed);
  for (std::size_t trial = 0; trial < 1500; ++trial) {
    const std::size_t len = 4 + trial % 3;
    const std::size_t count = 1 + rng() % 12;
    std::vector<Word> chosen{random_word(rng, len)};
    for (std::size_t k = 1; k < count; ++k) chosen.push_back(random_word(rng, 1 + rng() % len));
    check(std::move(chosen));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 60) f.add("took " + format_double(seconds) + " s, budget 60 s");
  return finish(f, std::to_string(sets) + " pattern sets, n <= 18");
}

// 2. The worked autocorrelation example.
CheckResult suite_correlation(const VerifyOptions&) {
  Failures f;
  const Word w = Word::parse("10100101");
  const Correlation c = autocorrelation(w);
  if (c.str() != "[10000101]") f.add("corr(10100101) = " + c.str());
  if (correlation_number(w) != 133) f.add("corr number " + correlation_number(w).get_str());
  if (correlation_polynomial(w).evaluate(2) != 133) f.add("f_w(2) != 133");
  return finish(f, "corr(10100101) = " + c.str() + ", number " + correlation_number(w).get_str() +
                       ", tau " + std::to_string(recurrence_time(w)));
}

// 3. c_{0^N}(j) = c_{0^N 1}(j) - c_{0^N 1}(j - N).
CheckResult suite_gf_identity(const VerifyOptions&) {
  constexpr std::size_t kMaxJ = 64;
  Failures f;
  for (std::size_t n = 1; n <= 10; ++n) {
    const Word w2 = Word::repeat(0, n);
    const Word w1 = w2 + Word::parse("1");
    const auto c1 = count_avoiding_series(PatternSet::single(w1), kMaxJ);
    const auto c2 = count_avoiding_series(PatternSet::single(w2), kMaxJ);
    if (gf_coefficients(w1, kMaxJ) != c1 || gf_coefficients(w2, kMaxJ) != c2)
      f.add("generating function disagrees with automaton at N=" + std::to_string(n));
    for (std::size_t j = 0; j <= kMaxJ; ++j) {
      const BigInt shifted = j >= n ? c1[j - n] : BigInt(0);
      if (c2[j] != c1[j] - shifted) f.add("N=" + std::to_string(n) + " j=" + std::to_string(j));
    }
  }
  return finish(f, "N = 1..10, j = 0..64");
}

// 4. Root and matrix engines within 1e-10.
CheckResult suite_theta_agreement(const VerifyOptions& opt) {
  constexpr double kTol = 1e-10;
  Failures f;
  std::vector<Word> words = all_binary_words_up_to(8);
  std::mt19937_64 rng(opt.seed);
  for (int k = 0; k < 1000; ++k) words.push_back(random_word(rng, 9 + rng() % 4));
  std::vector<double> diffs(words.size());
  parallel_for(
      words.size(),
      [&](std::size_t i) {
        diffs[i] = std::abs(theta_root(words[i]).theta - theta_matrix(PatternSet::single(words[i])).theta);
      },
      opt.workers);
  double worst = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    worst = std::max(worst, diffs[i]);
    if (!(diffs[i] <= kTol)) f.add(words[i].str() + " differs by " + format_double(diffs[i]));
  }
  return finish(f, std::to_string(words.size()) + " words, max |diff| " + format_double(worst));
}

struct CorrClass {
  Word representative;
  std::size_t members = 0;
  std::size_t tau = 0;
  std::vector<BigInt> counts;
};

std::vector<CorrClass> correlation_classes(std::size_t level, std::size_t n_max) {
  std::map<Correlation, CorrClass> classes;
  for (const auto& w : all_words(level)) {
    auto [it, fresh] = classes.try_emplace(autocorrelation(w));
    if (fresh) {
      it->second.representative = w;
      it->second.tau = recurrence_time(w);
      it->second.counts = gf_coefficients(w, n_max);
    }
    ++it->second.members;
  }
  std::vector<CorrClass> out;
  for (auto& [c, cls] : classes) out.push_back(std::move(cls));
  return out;
}

// 5. tau(u) > tau(w) implies faster escape through u, and smaller survival
// from n = tau(w) on. Counts depend on the word only through its
// correlation, so pairs are checked per correlation class.
CheckResult suite_main_theorem(const VerifyOptions&) {
  constexpr std::size_t kRateN = 256;
  constexpr std::size_t kSurvivalN = 64;
  Failures f;
  std::uint64_t pairs = 0;
  for (std::size_t level = 1; level <= 8; ++level) {
    auto classes = correlation_classes(level, kRateN + level);
    for (const auto& c : classes)
      if (count_avoiding_series(PatternSet::single(c.representative), kSurvivalN + level) !=
          std::vector<BigInt>(c.counts.begin(), c.counts.begin() + static_cast<long>(kSurvivalN + level) + 1))
        f.add("class series mismatch for " + c.representative.str());
    for (const auto& w : classes) {
      for (const auto& u : classes) {
        if (u.tau <= w.tau) continue;
        pairs += static_cast<std::uint64_t>(w.members) * u.members;
        const std::string label = "w=" + w.representative.str() + " u=" + u.representative.str();
        if (!(u.counts[kRateN] < w.counts[kRateN])) f.add(label + ": rate order fails at n=256");
        for (std::size_t n = w.tau; n <= kSurvivalN; ++n)
          if (!(u.counts[n + level] < w.counts[n + level])) {
            f.add(label + ": survival order fails at n=" + std::to_string(n));
            break;
          }
      }
    }
  }
  return finish(f, std::to_string(pairs) + " ordered pairs with distinct tau, levels 1..8");
}

// 6. Dominance threshold on random pairs, plus a violation below it.
CheckResult suite_dominance(const VerifyOptions& opt) {
  constexpr std::size_t kMaxN = 256;
  Failures f;
  std::mt19937_64 rng(opt.seed ^ 0x5eedULL);
  std::size_t checked = 0;
  while (checked < 200) {
    const std::size_t len = 4 + rng() % 7;
    Word w = random_word(rng, len), u = random_word(rng, len);
    if (autocorrelation(w) == autocorrelation(u)) continue;
    if (correlation_number(w) < correlation_number(u)) std::swap(w, u);
    ++checked;
    const std::size_t n0 = dominance_threshold(w, u);
    const auto cw = gf_coefficients(w, kMaxN), cu = gf_coefficients(u, kMaxN);
    for (std::size_t n = n0; n <= kMaxN; ++n)
      if (!(cw[n] > cu[n])) {
        f.add("w=" + w.str() + " u=" + u.str() + " n=" + std::to_string(n));
        break;
      }
  }

  // Witness: 00 against 01 has threshold 3 and equal counts at n = 2.
  const Word w = Word::parse("00"), u = Word::parse("01");
  const std::size_t n0 = dominance_threshold(w, u);
  const auto cw = gf_coefficients(w, n0), cu = gf_coefficients(u, n0);
  std::string witness;
  for (std::size_t n = w.size(); n < n0; ++n)
    if (!(cw[n] > cu[n])) witness = "c_00(" + std::to_string(n) + ")=" + cw[n].get_str() + " <= c_01(" +
                                    std::to_string(n) + ")=" + cu[n].get_str();
  if (witness.empty()) f.add("no violation below the threshold for 00 vs 01");

  // How often the threshold is sharp among short words.
  std::size_t sharp = 0, total = 0;
  for (std::size_t len = 2; len <= 6; ++len) {
    auto words = all_words(len);
    for (const auto& a : words)
      for (const auto& b : words) {
        if (!(correlation_number(a) > correlation_number(b))) continue;
        ++total;
        const std::size_t t = dominance_threshold(a, b);
        const auto ca = gf_coefficients(a, t), cb = gf_coefficients(b, t);
        for (std::size_t n = len; n < t; ++n)
          if (!(ca[n] > cb[n])) {
            ++sharp;
            break;
          }
      }
  }
  return finish(f, "200 random pairs to n=256; witness " + witness + "; " + std::to_string(sharp) + "/" +
                       std::to_string(total) + " pairs of length 2..6 violate somewhere in [N, n0)");
}

// 7. max rho at level N+1 equals min rho at level N.
CheckResult suite_monotonicity(const VerifyOptions& opt) {
  constexpr double kTol = 1e-12;
  Failures f;
  ThetaCache cache;
  std::vector<double> lo(12), hi(12);
  for (std::size_t level = 1; level <= 11; ++level) {
    (void)opt;
    auto rows = scan_level(level, 2, &cache);
    auto [mn, mx] = std::minmax_element(rows.begin(), rows.end(),
                                        [](const ScanRow& a, const ScanRow& b) { return a.rho < b.rho; });
    lo[level] = mn->rho;
    hi[level] = mx->rho;
  }
  double worst = 0;
  for (std::size_t level = 1; level <= 10; ++level) {
    const double d = std::abs(hi[level + 1] - lo[level]);
    worst = std::max(worst, d);
    if (!(d <= kTol)) f.add("N=" + std::to_string(level) + " differs by " + format_double(d));
  }
  const Polynomial z_minus_1 = Polynomial::from_ints({-1, 1});
  for (std::size_t level = 1; level <= 4; ++level) {
    const Word w2 = Word::repeat(0, level);
    const Word w1 = w2 + Word::parse("1");
    auto [q, r] = divmod(escape_denominator(w1), escape_denominator(w2));
    if (!(r == Polynomial()) || !(q == z_minus_1))
      f.add("denominator of " + w1.str() + " is not (z-1) times that of " + w2.str());
  }
  return finish(f, "N = 1..10, max |difference| " + format_double(worst) + "; (z-1) factor exact for N <= 4");
}

// 8. Local escape ratios and the asymptotic expansion.
CheckResult suite_local(const VerifyOptions& opt) {
  Failures f;
  std::ostringstream summary;
  struct Case {
    Point x;
    std::size_t level;
    double limit;
    double tol;
  };
  const Case cases[] = {{Point::rational(0), 16, 0.5, 1e-3},
                        {Point::rational(Rational(1, 3)), 16, 0.75, 1e-3},
                        {Point::sqrt2_minus_1(), 20, 1.0, 1e-2}};
  for (const auto& c : cases) {
    const LocalEscape e = local_escape_ratio(c.x, c.level);
    summary << c.x.label() << "@" << c.level << ": " << format_double(e.ratio) << "; ";
    if (!(std::abs(e.ratio - c.limit) <= c.tol)) f.add(c.x.label() + " ratio " + format_double(e.ratio));
  }

  // C_N = max over sampled words of |rho - 1/(2 f(2))| * 4^N; stable when
  // the spread max C_N / min C_N stays within a factor 2.
  std::mt19937_64 rng(opt.seed ^ 0xa5a5ULL);
  std::vector<double> constants;
  summary << "C_N:";
  for (std::size_t level = 8; level <= 14; ++level) {
    double worst = 0;
    for (int k = 0; k < 64; ++k) {
      const Word w = random_word(rng, level);
      const double rho = rho_from_gap(theta_root(w).gap, 2);
      worst = std::max(worst, std::abs(rho - asymptotic_escape(w)) * std::ldexp(1.0, 2 * static_cast<int>(level)));
    }
    constants.push_back(worst);
    summary << " " << format_double(std::round(worst * 1000) / 1000);
  }
  auto [mn, mx] = std::minmax_element(constants.begin(), constants.end());
  if (!(*mn > 0 && *mx <= 2 * *mn)) f.add("C_N spread " + format_double(*mx / *mn));
  return finish(f, summary.str());
}

double matrix_rho(const IntervalUnion& hole, MatrixTheta* bounds = nullptr) {
  const PatternSet p = code_hole(MapSpec::doubling(), hole);
  if (bounds) *bounds = theta_matrix(p);
  return escape_rate(p).rho;
}

// Survival at step n as an exact rational.
Rational survival_at(const IntervalUnion& hole, std::size_t n) {
  return survival_series(code_hole(MapSpec::doubling(), hole), n).measures[n];
}

// 9. Bigger holes that escape more slowly.
CheckResult suite_sizes(const VerifyOptions&) {
  constexpr std::size_t kExactN = 256;
  Failures f;
  std::ostringstream summary;
  auto hole = [](const char* text) { return hole_intervals(MapSpec::doubling(), parse_hole(text)); };
  struct Pair {
    const char* big;
    const char* small;
  };
  const Pair pairs[] = {{"union:0:1/4,1/2:5/8", "interval:1/4:1/2"}, {"interval:0:5/16", "interval:1/2:3/4"}};
  for (const auto& p : pairs) {
    const IntervalUnion a = hole(p.big), b = hole(p.small);
    MatrixTheta ta, tb;
    const double ra = matrix_rho(a, &ta), rb = matrix_rho(b, &tb);
    if (!(a.measure() > b.measure())) f.add(a.str() + " is not larger than " + b.str());
    if (!(ta.lower > tb.upper)) f.add("theta brackets overlap for " + a.str());
    if (!(survival_at(a, kExactN) > survival_at(b, kExactN))) f.add("exact survival order fails for " + a.str());
    if (!(ra < rb)) f.add("rho order fails for " + a.str());
    summary << "rho(" << a.str() << ")=" << format_double(ra) << " < rho(" << b.str() << ")=" << format_double(rb)
            << " with measures " << to_string(a.measure()) << " > " << to_string(b.measure()) << "; ";
  }
  for (const char* text : {"interval:0:1/4", "interval:1/4:1/2", "interval:1/2:3/4"}) {
    const std::size_t geometric = poincare_time(MapSpec::doubling(), parse_hole(text));
    const std::size_t combinatorial = recurrence_time(code_hole(MapSpec::doubling(), parse_hole(text)));
    if (geometric != combinatorial) f.add(std::string(text) + " geometric and combinatorial tau differ");
    summary << "tau(" << hole(text).str() << ")=" << geometric << " ";
  }
  summary << "(geometric = combinatorial)";
  return finish(f, summary.str());
}

// 10. A hole of measure > 1/2 with escape rate < 0.1.
CheckResult suite_bighole(const VerifyOptions&) {
  Failures f;
  const BigHole h = big_hole_small_rate(0.5, 0.1);
  if (!(h.measure > Rational(1, 2))) f.add("measure " + to_string(h.measure));
  if (!(h.rho_base < 0.1)) f.add("base rate " + format_double(h.rho_base));
  if (!(std::abs(h.rho_union - h.rho_base) <= 1e-10))
    f.add("union rate " + format_double(h.rho_union) + " vs base " + format_double(h.rho_base));
  return finish(f, "base " + h.base_word.str() + ", depth " + std::to_string(h.depth) + ", measure " +
                       to_string(h.measure) + ", rho " + format_double(h.rho_union));
}

// 11. Tent, logistic and baker maps against their symbolic codings.
CheckResult suite_conjugacy(const VerifyOptions& opt) {
  constexpr std::size_t kDepth = 6;
  Failures f;
  const MapSpec tent = MapSpec::tent(), doubling = MapSpec::doubling();
  std::size_t tent_cells = 0;
  for (std::size_t level = 1; level <= 8; ++level) {
    for (std::uint64_t i = 1; i <= (std::uint64_t{1} << level); ++i) {
      ++tent_cells;
      const MarkovCylinder cell{level, i};
      const PatternSet code = code_hole(tent, cell);
      const Word& w = code.patterns().front();
      const std::string label = "tent " + to_string(HoleSpec(cell));
      const std::size_t tau_tent = poincare_time(tent, cell);
      const std::size_t tau_doubling = poincare_time(doubling, MarkovCylinder{level, w.index() + 1});
      if (tau_tent != tau_doubling || tau_tent != recurrence_time(w)) f.add(label + ": tau differs");
      // Survival from exact tent preimages against the word's count series.
      const SurvivalSeries s = survival_series(code, kDepth);
      const IntervalUnion a = hole_intervals(tent, cell);
      IntervalUnion omega = a;
      for (std::size_t n = 0; n <= kDepth; ++n) {
        if (n > 0) omega = a.unite(preimage(tent, omega));
        if (1 - omega.measure() != s.measures[n]) {
          f.add(label + ": survival differs at n=" + std::to_string(n));
          break;
        }
      }
      if (code_hole(MapSpec::logistic(), cell) != code) f.add("logistic coding differs for " + label);
    }
  }

  double worst_arcsine = 0;
  for (std::size_t level = 1; level <= 8; ++level)
    for (std::uint64_t i = 1; i <= (std::uint64_t{1} << level); ++i) {
      const double m = measure(MeasureKind::arcsine, MarkovCylinder{level, i}).value;
      worst_arcsine = std::max(worst_arcsine, std::abs(m - std::ldexp(1.0, -static_cast<int>(level))));
    }
  if (!(worst_arcsine <= 1e-12)) f.add("arcsine cell measure off by " + format_double(worst_arcsine));

  // Baker rectangles: exact 2-D grid survival and rectangle-image return
  // times against the coded word.
  std::size_t rects = 0;
  std::map<Word, SurvivalSeries> series;
  for (std::size_t total = 2; total <= 8; ++total) {
    for (std::size_t n = 1; n < total; ++n) {
      const std::size_t m = total - n;
      for (std::uint64_t i = 1; i <= (std::uint64_t{1} << n); ++i)
        for (std::uint64_t j = 1; j <= (std::uint64_t{1} << m); ++j) {
          ++rects;
          const BakerRect r{n, m, i, j};
          const Word w = code_hole(MapSpec::baker(), r).patterns().front();
          auto it = series.find(w);
          if (it == series.end()) it = series.emplace(w, survival_series(PatternSet::single(w), kDepth)).first;
          if (baker_survival_geometric(r, kDepth) != it->second.measures)
            f.add("baker " + to_string(HoleSpec(r)) + " survival differs");
          if (poincare_time(MapSpec::baker(), r) != recurrence_time(w))
            f.add("baker " + to_string(HoleSpec(r)) + " tau differs");
        }
    }
  }

  SimConfig cfg;
  cfg.samples = opt.mc_samples;
  cfg.horizon = 20;
  cfg.seed = opt.seed;
  cfg.workers = opt.workers;
  const BakerRect mc_rects[] = {{1, 1, 1, 2}, {2, 2, 2, 3}, {3, 2, 5, 1}, {2, 5, 4, 19}, {4, 4, 7, 11}};
  for (const auto& r : mc_rects) {
    const SurvivalEstimate est = survival_mc(MapSpec::baker(), r, cfg);
    const SurvivalSeries exact = survival_series(code_hole(MapSpec::baker(), r), cfg.horizon);
    if (!agrees_with(est, exact, 3.0)) f.add("baker Monte Carlo outside 3 sigma for " + to_string(HoleSpec(r)));
  }
  return finish(f, std::to_string(tent_cells) + " tent/logistic cells, max arcsine error " +
                       format_double(worst_arcsine) + ", " + std::to_string(rects) +
                       " baker rectangles, 5 baker Monte Carlo runs at " + std::to_string(cfg.samples) + " samples");
}

// 12. Monte Carlo fit for {00} and the rotation demonstration.
CheckResult suite_monte_carlo(const VerifyOptions& opt) {
  Failures f;
  std::ostringstream summary;
  SimConfig cfg;
  cfg.samples = opt.mc_samples;
  cfg.horizon = 40;
  cfg.seed = opt.seed;
  cfg.workers = opt.workers;
  const MarkovCylinder hole{2, 1};
  const SurvivalEstimate est = survival_mc(MapSpec::doubling(), hole, cfg);
  const double fit = escape_rate_fit(est, cfg.horizon / 4, cfg.horizon);
  const double exact = rho_from_gap(theta_root(Word::parse("00")).gap, 2);
  if (!(std::abs(fit - exact) <= 0.05 * exact)) f.add("fit " + format_double(fit));
  if (!agrees_with(est, survival_series(PatternSet::parse("00"), cfg.horizon)))
    f.add("doubling curve outside 3 sigma");
  summary << "fit " << format_double(fit) << " vs " << format_double(exact) << "; ";

  for (const MapSpec& map : {MapSpec::tent(), MapSpec::logistic()}) {
    const MarkovCylinder cell{3, 2};
    if (!agrees_with(survival_mc(map, cell, cfg), survival_series(code_hole(map, cell), cfg.horizon)))
      f.add(map.str() + " curve outside 3 sigma");
  }

  SimConfig small = cfg;
  small.samples = 50'000;
  small.workers = 1;
  const auto serial = survival_mc(MapSpec::doubling(), hole, small);
  small.workers = 3;
  if (survival_mc(MapSpec::doubling(), hole, small).survivors != serial.survivors)
    f.add("estimate depends on worker count");

  constexpr double kGolden = 0.6180339887498949;
  constexpr std::uint64_t kGrid = 100'000;
  constexpr std::size_t kHorizon = 100'000;
  const RotationEscape base = rotation_escape(kGolden, 0, 0.1, kGrid, kHorizon);
  if (!base.all_escaped()) f.add("not every grid point escaped");
  summary << "rotation max escape time " << (base.max_time ? std::to_string(*base.max_time) : "none");
  auto sorted = [](std::vector<std::uint32_t> t) {
    std::sort(t.begin(), t.end());
    return t;
  };
  const auto base_sorted = sorted(base.times);
  for (double c : {0.1, 0.25, 0.5, 0.75, 0.95}) {
    const RotationEscape moved = rotation_escape(kGolden, c, 0.1, kGrid, kHorizon, c);
    const RotationEscape fixed = rotation_escape(kGolden, c, 0.1, kGrid, kHorizon);
    if (sorted(moved.times) != base_sorted) f.add("escape-time profile changes for shift " + format_double(c));
    if (fixed.max_time != base.max_time) f.add("max escape time changes for hole at " + format_double(c));
  }
  return finish(f, summary.str());
}

using SuiteFn = CheckResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"oracle", suite_oracle},           {"correlation", suite_correlation},
      {"gf-identity", suite_gf_identity}, {"theta-agreement", suite_theta_agreement},
      {"main-theorem", suite_main_theorem}, {"dominance", suite_dominance},
      {"monotonicity", suite_monotonicity}, {"local", suite_local},
      {"sizes", suite_sizes},             {"bighole", suite_bighole},
      {"conjugacy", suite_conjugacy},     {"monte-carlo", suite_monte_carlo}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

CheckResult run_suite(std::string_view name, const VerifyOptions& options) {
  for (const auto& [suite, fn] : registry()) {
    if (suite != name) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = fn(options);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.name = suite;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw Error("unknown suite '" + std::string(name) + "'");
}

std::vector<CheckResult> run_suites(std::string_view name, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  if (name == "all") {
    for (const auto& suite : suite_names()) out.push_back(run_suite(suite, options));
  } else {
    out.push_back(run_suite(name, options));
  }
  return out;
}

}  // namespace escapelab
