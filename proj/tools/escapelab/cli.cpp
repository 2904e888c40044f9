#include "escapelab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>

#include <escapelab/avoid.hpp>
#include <escapelab/maps.hpp>
#include <escapelab/parallel.hpp>
#include <escapelab/report.hpp>
#include <escapelab/simulate.hpp>
#include <escapelab/spectral.hpp>
#include <escapelab/verify.hpp>
#include <escapelab/words.hpp>

namespace escapelab::cli {

namespace {

enum class Format { text, csv, json };

struct Options {
  std::string format;
  std::string out;
  std::string map = "doubling";
  std::string hole;
  std::string patterns;
  unsigned alphabet = 2;
  std::string word;
  std::size_t n = 10;
  std::size_t n_max = 40;
  std::size_t level = 4;
  std::size_t level_min = 1;
  std::size_t level_max = 16;
  bool brute = false;
  std::string x = "0";
  std::string side = "auto";
  std::string size;
  std::size_t points = 0;
  std::size_t bracket_level = 0;
  double eps = 0.5;
  double r = 0.1;
  double alpha = 0.6180339887498949;
  double hole_start = 0;
  double hole_length = 0.1;
  double shift = 0;
  std::uint64_t grid = 100'000;
  std::size_t horizon = 100'000;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 20240521;
  std::size_t precision = 0;
  std::size_t fit_from = 0;
  std::string suite = "all";
};

Format parse_format(const std::string& text, Format fallback) {
  if (text.empty()) return fallback;
  if (text == "text") return Format::text;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw Error("unknown format '" + text + "' (text, csv, json)");
}

// Aligned "key value" lines.
void write_pairs(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) os << k << std::string(width + 2 - k.size(), ' ') << v << '\n';
}

void write_pairs_csv(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << rows[i].first;
  os << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << rows[i].second;
  os << '\n';
}

void emit_pairs(std::ostream& os, Format f, const std::vector<std::pair<std::string, std::string>>& rows,
                const nlohmann::json& j) {
  if (f == Format::json) os << j.dump(2) << '\n';
  else if (f == Format::csv) write_pairs_csv(os, rows);
  else write_pairs(os, rows);
}

PatternSet resolve_patterns(const Options& o) {
  if (!o.patterns.empty()) return PatternSet::parse(o.patterns, o.alphabet);
  if (!o.hole.empty()) return code_hole(MapSpec::parse(o.map), parse_hole(o.hole));
  throw Error("give --patterns or --hole (with --map)");
}

CellSide parse_side(const std::string& s) {
  if (s == "auto") return CellSide::unspecified;
  if (s == "left") return CellSide::left;
  if (s == "right") return CellSide::right;
  throw Error("--side must be auto, left or right");
}

int cmd_corr(const Options& o, std::ostream& os) {
  const Word w = Word::parse(o.word, o.alphabet);
  const Correlation c = autocorrelation(w);
  const std::string poly = correlation_polynomial(w).as_polynomial().to_string('z');
  const std::size_t tau = recurrence_time(w);
  emit_pairs(os, parse_format(o.format, Format::text),
             {{"word", w.str()},
              {"correlation", c.str()},
              {"corr_number", c.number().get_str()},
              {"polynomial", poly},
              {"tau", std::to_string(tau)}},
             {{"word", w.str()},
              {"correlation", c.str()},
              {"corr_number", c.number().get_str()},
              {"polynomial", poly},
              {"tau", tau}});
  return kOk;
}

int cmd_count(const Options& o, std::ostream& os) {
  const PatternSet p = resolve_patterns(o);
  const BigInt count = count_avoiding(p, o.n);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"patterns", p.str()}, {"n", std::to_string(o.n)}, {"count", count.get_str()}};
  nlohmann::json j = {{"patterns", p.str()}, {"n", o.n}, {"count", count.get_str()}};
  int status = kOk;
  if (o.brute) {
    const BigInt oracle = brute_force_count(p, o.n);
    rows.emplace_back("brute_force", oracle.get_str());
    j["brute_force"] = oracle.get_str();
    if (oracle != count) status = kCheckFailed;
  }
  emit_pairs(os, parse_format(o.format, Format::text), rows, j);
  return status;
}

int cmd_survival(const Options& o, std::ostream& os) {
  const SurvivalSeries s = survival_series(resolve_patterns(o), o.n_max);
  if (parse_format(o.format, Format::csv) == Format::json) os << to_json(s).dump(2) << '\n';
  else write_survival_csv(os, s);
  return kOk;
}

int cmd_escape(const Options& o, std::ostream& os) {
  const PatternSet p = resolve_patterns(o);
  const EscapeReport r = escape_rate(p);
  const Format f = parse_format(o.format, Format::text);
  if (f == Format::json) {
    nlohmann::json j = to_json(r);
    j["patterns"] = p.str();
    os << j.dump(2) << '\n';
  } else {
    std::vector<std::pair<std::string, std::string>> rows = {{"patterns", p.str()},
                                                             {"theta", format_double(r.theta)},
                                                             {"rho", format_double(r.rho)},
                                                             {"tau", std::to_string(r.tau)},
                                                             {"engine", std::string(to_string(r.engine))},
                                                             {"hole_measure", to_string(r.hole_measure)}};
    if (r.corr_number) rows.emplace_back("corr_number", r.corr_number->get_str());
    if (r.theta_root) rows.emplace_back("theta_root", format_double(*r.theta_root));
    if (r.theta_matrix) rows.emplace_back("theta_matrix", format_double(*r.theta_matrix));
    rows.emplace_back("engines_agree", r.engines_agree ? "true" : "false");
    if (f == Format::csv) write_pairs_csv(os, rows);
    else write_pairs(os, rows);
  }
  return r.engines_agree ? kOk : kCheckFailed;
}

int cmd_tau(const Options& o, std::ostream& os) {
  const MapSpec map = MapSpec::parse(o.map);
  const HoleSpec hole = parse_hole(o.hole);
  const std::size_t geometric = poincare_time(map, hole);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"map", map.str()}, {"hole", to_string(hole)}, {"geometric", std::to_string(geometric)}};
  nlohmann::json j = {{"map", map.str()}, {"hole", to_string(hole)}, {"geometric", geometric}};
  try {
    const std::size_t combinatorial = recurrence_time(code_hole(map, hole));
    rows.emplace_back("combinatorial", std::to_string(combinatorial));
    j["combinatorial"] = combinatorial;
  } catch (const NonMarkovHoleError&) {
    j["combinatorial"] = nullptr;
  }
  emit_pairs(os, parse_format(o.format, Format::text), rows, j);
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& os) {
  if (o.level < 1 || o.level > 16) throw Error("scan level must lie in [1, 16]");
  const MapSpec map = MapSpec::parse(o.map);
  std::vector<ScanRow> rows;
  ThetaCache cache;
  if (map.kind == MapKind::doubling || map.kind == MapKind::expanding) {
    if (ipow(map.kappa, o.level) > BigInt(1UL << 20)) throw Error("scan limited to 2^20 holes");
    rows = scan_level(o.level, map.alphabet(), &cache);
  } else if (map.kind == MapKind::tent || map.kind == MapKind::logistic) {
    rows.resize(std::size_t{1} << o.level);
    parallel_for(rows.size(), [&](std::size_t k) {
      const MarkovCylinder cell{o.level, k + 1};
      rows[k] = scan_word(o.level, k + 1, code_hole(map, cell).patterns().front(), &cache);
    });
  } else {
    throw Error("scan supports doubling, expand:k, tent and logistic");
  }
  if (parse_format(o.format, Format::csv) == Format::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    os << j.dump(2) << '\n';
  } else {
    write_scan_csv(os, rows);
  }
  return kOk;
}

int cmd_local(const Options& o, std::ostream& os) {
  const Format f = parse_format(o.format, Format::csv);
  if (!o.size.empty()) {
    // Fixed-size sweep: intervals of length lambda centred on a grid,
    // bracketed between unions of fine dyadic cells.
    const Rational lambda = parse_rational(o.size);
    if (!(lambda > 0 && lambda < 1)) throw Error("--size must lie in (0, 1)");
    const Rational inverse = 1 / lambda;
    BigInt cover = inverse.get_num() / inverse.get_den();
    if (cover * inverse.get_den() != inverse.get_num()) cover += 1;
    const std::size_t points = o.points ? o.points : cover.get_ui();
    const std::size_t level =
        o.bracket_level ? o.bracket_level : static_cast<std::size_t>(std::ceil(-std::log2(to_double(lambda)))) + 6;
    std::vector<EscapeBracket> out(points);
    parallel_for(points, [&](std::size_t k) {
      Rational centre(2 * static_cast<long>(k) + 1, 2 * static_cast<long>(points));
      centre.canonicalize();
      Rational lo = centre - lambda / 2, hi = centre + lambda / 2;
      if (lo < 0) lo = 0;
      if (hi > 1) hi = 1;
      out[k] = bracket_escape(Interval{lo, hi}, level);
    });
    if (f == Format::json) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& b : out) j.push_back(to_json(b));
      os << j.dump(2) << '\n';
    } else {
      os << "x,lo,hi,bracket_level,rho_inner,rho_outer,ratio_inner,ratio_outer\n";
      for (const auto& b : out) {
        const double len = to_double(b.hole.length());
        os << format_double(to_double((b.hole.lo + b.hole.hi) / 2)) << ',' << to_string(b.hole.lo) << ','
           << to_string(b.hole.hi) << ',' << b.level << ',' << format_double(b.rho_inner) << ','
           << format_double(b.rho_outer) << ',' << format_double(b.rho_inner / len) << ','
           << format_double(b.rho_outer / len) << '\n';
      }
    }
    return kOk;
  }

  const Point x = Point::parse(o.x);
  const CellSide side = parse_side(o.side);
  if (o.level_min < 1 || o.level_min > o.level_max || o.level_max > 62) throw Error("levels must satisfy 1 <= min <= max <= 62");
  ThetaCache cache;
  std::vector<LocalEscape> rows(o.level_max - o.level_min + 1);
  parallel_for(rows.size(), [&](std::size_t k) {
    rows[k] = local_escape_ratio(x, o.level_min + k, side, o.alphabet, &cache);
  });
  if (f == Format::json) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      nlohmann::json e = to_json(rows[k]);
      e["level"] = o.level_min + k;
      j.push_back(e);
    }
    os << nlohmann::json{{"x", x.label()}, {"rows", j}}.dump(2) << '\n';
  } else {
    os << "level,word,rho,measure,ratio\n";
    for (std::size_t k = 0; k < rows.size(); ++k)
      os << o.level_min + k << ',' << rows[k].word.str() << ',' << format_double(rows[k].rho) << ','
         << to_string(rows[k].measure) << ',' << format_double(rows[k].ratio) << '\n';
  }
  return kOk;
}

int cmd_mono(const Options& o, std::ostream& os) {
  if (o.level_max < 1 || o.level_max > 15) throw Error("--level-max must lie in [1, 15]");
  ThetaCache cache;
  std::vector<double> lo(o.level_max + 2), hi(o.level_max + 2);
  for (std::size_t level = 1; level <= o.level_max + 1; ++level) {
    const auto rows = scan_level(level, 2, &cache);
    auto [mn, mx] = std::minmax_element(rows.begin(), rows.end(),
                                        [](const ScanRow& a, const ScanRow& b) { return a.rho < b.rho; });
    lo[level] = mn->rho;
    hi[level] = mx->rho;
  }
  bool ok = true;
  const Format f = parse_format(o.format, Format::csv);
  nlohmann::json j = nlohmann::json::array();
  if (f != Format::json) os << "level,min_rho,max_rho_next_level,difference\n";
  for (std::size_t level = 1; level <= o.level_max; ++level) {
    const double d = hi[level + 1] - lo[level];
    ok = ok && std::abs(d) <= 1e-12;
    if (f == Format::json)
      j.push_back({{"level", level}, {"min_rho", lo[level]}, {"max_rho_next_level", hi[level + 1]}, {"difference", d}});
    else
      os << level << ',' << format_double(lo[level]) << ',' << format_double(hi[level + 1]) << ',' << format_double(d)
         << '\n';
  }
  if (f == Format::json) os << j.dump(2) << '\n';
  return ok ? kOk : kCheckFailed;
}

int cmd_sizes(const Options& o, std::ostream& os) {
  struct Example {
    std::string big, small;
  };
  const Example examples[] = {{"union:0:1/4,1/2:5/8", "interval:1/4:1/2"}, {"interval:0:5/16", "interval:1/2:3/4"}};
  const MapSpec doubling = MapSpec::doubling();
  const Format f = parse_format(o.format, Format::csv);
  nlohmann::json j = nlohmann::json::array();
  if (f != Format::json) os << "hole,measure,rho,tau_geometric,tau_combinatorial,compared_with,holds\n";
  bool ok = true;
  for (const auto& e : examples) {
    const HoleSpec big = parse_hole(e.big), small = parse_hole(e.small);
    const PatternSet pb = code_hole(doubling, big), ps = code_hole(doubling, small);
    const double rb = escape_rate(pb).rho, rs = escape_rate(ps).rho;
    const bool holds = pb.measure() > ps.measure() && rb < rs;
    ok = ok && holds;
    for (const auto& [hole, p, rho, other] :
         {std::tuple{big, pb, rb, e.small}, std::tuple{small, ps, rs, e.big}}) {
      const IntervalUnion u = hole_intervals(doubling, hole);
      const std::size_t tg = poincare_time(doubling, hole), tc = recurrence_time(p);
      if (f == Format::json)
        j.push_back({{"hole", u.str()}, {"measure", to_string(p.measure())}, {"rho", rho}, {"tau_geometric", tg},
                     {"tau_combinatorial", tc}, {"compared_with", other}, {"holds", holds}});
      else
        os << '"' << u.str() << "\"," << to_string(p.measure()) << ',' << format_double(rho) << ',' << tg << ','
           << tc << ',' << other << ',' << (holds ? "true" : "false") << '\n';
    }
  }
  if (f == Format::json) os << j.dump(2) << '\n';
  return ok ? kOk : kCheckFailed;
}

int cmd_bighole(const Options& o, std::ostream& os) {
  const BigHole h = big_hole_small_rate(o.eps, o.r);
  const bool ok = h.measure > 1 - Rational(o.eps) && h.rho_base < o.r &&
                  (std::isnan(h.rho_union) || std::abs(h.rho_union - h.rho_base) <= 1e-10);
  const Format f = parse_format(o.format, Format::text);
  if (f == Format::json) {
    nlohmann::json j = to_json(h);
    j["eps"] = o.eps;
    j["r"] = o.r;
    j["verified"] = ok;
    os << j.dump(2) << '\n';
  } else {
    emit_pairs(os, f,
               {{"base_word", h.base_word.str()},
                {"level", std::to_string(h.level)},
                {"depth", std::to_string(h.depth)},
                {"measure", to_string(h.measure)},
                {"rho_base", format_double(h.rho_base)},
                {"rho_union", format_double(h.rho_union)},
                {"hole", h.hole.str()},
                {"verified", ok ? "true" : "false"}},
               {});
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_rotate(const Options& o, std::ostream& os) {
  const RotationEscape r = rotation_escape(o.alpha, o.hole_start, o.hole_length, o.grid, o.horizon, o.shift);
  const std::string max_time = r.max_time ? std::to_string(*r.max_time) : "not escaped";
  const Format f = parse_format(o.format, Format::text);
  nlohmann::json j = to_json(r);
  j["alpha"] = o.alpha;
  j["hole_start"] = o.hole_start;
  j["hole_length"] = o.hole_length;
  j["shift"] = o.shift;
  emit_pairs(os, f,
             {{"alpha", format_double(o.alpha)},
              {"hole_start", format_double(o.hole_start)},
              {"hole_length", format_double(o.hole_length)},
              {"grid", std::to_string(r.grid)},
              {"escaped", std::to_string(r.escaped)},
              {"max_time", max_time}},
             j);
  return r.all_escaped() ? kOk : kCheckFailed;
}

int cmd_mc(const Options& o, std::ostream& os) {
  const MapSpec map = MapSpec::parse(o.map);
  const HoleSpec hole = parse_hole(o.hole);
  SimConfig cfg;
  cfg.samples = o.samples;
  cfg.horizon = o.n_max;
  cfg.seed = o.seed;
  cfg.precision = o.precision;
  const SurvivalEstimate est = survival_mc(map, hole, cfg);

  std::optional<SurvivalSeries> exact;
  try {
    exact = survival_series(code_hole(map, hole), est.horizon());
  } catch (const NonMarkovHoleError&) {
  }
  const bool agrees = !exact || agrees_with(est, *exact);
  const std::size_t from = o.fit_from ? o.fit_from : est.horizon() / 4;

  if (parse_format(o.format, Format::csv) == Format::json) {
    nlohmann::json j = to_json(est);
    j["map"] = map.str();
    j["hole"] = to_string(hole);
    j["seed"] = o.seed;
    try {
      j["fit"] = escape_rate_fit(est, from, est.horizon());
      j["fit_window"] = {from, est.horizon()};
    } catch (const Error& e) {
      j["fit"] = nullptr;
      j["fit_error"] = e.what();
    }
    if (exact) {
      j["exact_rho"] = escape_rate(code_hole(map, hole)).rho;
      j["agrees_within_3_sigma"] = agrees;
    }
    os << j.dump(2) << '\n';
  } else {
    write_mc_csv(os, est);
  }
  return agrees ? kOk : kCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& os) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.mc_samples = o.samples;
  const auto results = run_suites(o.suite, vo);
  bool ok = true;
  const Format f = parse_format(o.format, Format::text);
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (f == Format::json) {
      j.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    } else {
      char secs[32];
      std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
      os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << secs << ") " << r.detail << '\n';
    }
  }
  if (f == Format::json) os << j.dump(2) << '\n';
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Escape rates, survival probabilities and recurrence times for holes in chaotic maps", "escapelab"};
  app.require_subcommand(1, 1);
  Options o;
  std::function<int(const Options&, std::ostream&)> command;

  auto add = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", o.format, "Output format: text, csv or json");
    sub->add_option("--out", o.out, "Write output to this file");
    sub->callback([&command, fn] { command = fn; });
    return sub;
  };
  auto hole_options = [&](CLI::App* sub) {
    sub->add_option("--patterns", o.patterns, "Comma-separated forbidden words");
    sub->add_option("--alphabet", o.alphabet, "Alphabet size for --patterns")->check(CLI::Range(2, 36));
    sub->add_option("--map", o.map, "doubling, expand:K, tent, logistic, baker, rot:ALPHA");
    sub->add_option("--hole", o.hole, "markov:N:i, interval:a:b, union:a:b,c:d, rect:N:M:i:j");
  };

  auto* corr = add("corr", "Autocorrelation, correlation number, polynomial and tau of a word", cmd_corr);
  corr->add_option("word", o.word, "Symbol string")->required();
  corr->add_option("--alphabet", o.alphabet)->check(CLI::Range(2, 36));

  auto* count = add("count", "Number of length-n words avoiding the hole's patterns", cmd_count);
  hole_options(count);
  count->add_option("--n", o.n, "Word length");
  count->add_flag("--brute", o.brute, "Also count by full enumeration and compare");

  auto* survival = add("survival", "Exact survival series s_0..s_{n_max}", cmd_survival);
  hole_options(survival);
  survival->add_option("--n-max", o.n_max, "Horizon");

  auto* escape = add("escape", "Escape rate report", cmd_escape);
  hole_options(escape);

  auto* tau = add("tau", "Poincare recurrence time, geometric and combinatorial", cmd_tau);
  tau->add_option("--map", o.map);
  tau->add_option("--hole", o.hole)->required();

  auto* scan = add("scan", "Escape rate of every level-N Markov hole", cmd_scan);
  scan->add_option("--level", o.level, "Partition level N (<= 16)");
  scan->add_option("--map", o.map, "doubling, expand:K, tent or logistic");

  auto* local = add("local", "Local escape ratio rho(I_N(x)) / lambda(I_N(x))", cmd_local);
  local->add_option("--x", o.x, "Point: p/q, decimal, sqrt2-1, golden, periodic:WORD");
  local->add_option("--level-min", o.level_min);
  local->add_option("--level-max", o.level_max);
  local->add_option("--side", o.side, "Cell choice at partition endpoints: auto, left, right");
  local->add_option("--alphabet", o.alphabet)->check(CLI::Range(2, 36));
  local->add_option("--size", o.size, "Fixed hole length for a sweep over x, e.g. 1/327");
  local->add_option("--points", o.points, "Sweep points (default 1/size)");
  local->add_option("--level", o.bracket_level, "Dyadic level of the bracketing cells in a sweep");

  auto* mono = add("mono", "max rho at level N+1 against min rho at level N", cmd_mono);
  mono->add_option("--level-max", o.level_max, "Largest N (<= 15, default 10)");

  add("sizes", "Larger holes with smaller escape rates", cmd_sizes);

  auto* bighole = add("bighole", "A hole of measure > 1 - eps with escape rate < r", cmd_bighole);
  bighole->add_option("--eps", o.eps);
  bighole->add_option("--r", o.r);

  auto* rotate = add("rotate", "Escape times of a grid of points under a circle rotation", cmd_rotate);
  rotate->add_option("--alpha", o.alpha, "Rotation angle in (0, 1)");
  rotate->add_option("--hole-start", o.hole_start);
  rotate->add_option("--hole-length", o.hole_length);
  rotate->add_option("--grid", o.grid, "Number of equally spaced start points");
  rotate->add_option("--horizon", o.horizon, "Give up after this many steps");
  rotate->add_option("--shift", o.shift, "Translate the start grid");

  auto* mc = add("mc", "Monte Carlo survival curve", cmd_mc);
  mc->add_option("--map", o.map);
  mc->add_option("--hole", o.hole)->required();
  mc->add_option("--samples", o.samples);
  mc->add_option("--seed", o.seed);
  mc->add_option("--n-max", o.n_max, "Horizon");
  mc->add_option("--precision", o.precision, "Orbit bits (default n-max + 64)");
  mc->add_option("--fit-from", o.fit_from, "First step of the escape-rate fit (default n-max / 4)");

  auto* verify = add("verify", "Run verification suites", cmd_verify);
  verify->add_option("suite", o.suite, "Suite name or all");
  verify->add_option("--samples", o.samples, "Monte Carlo samples");
  verify->add_option("--seed", o.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadInput;
  }
  if (mono->parsed() && !mono->count("--level-max")) o.level_max = 10;

  try {
    if (o.out.empty()) return command(o, out);
    std::ofstream file(o.out);
    if (!file) throw Error("cannot write " + o.out);
    const int status = command(o, file);
    if (!file) throw Error("error writing " + o.out);
    return status;
  } catch (const std::exception& e) {
    err << "escapelab: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace escapelab::cli
