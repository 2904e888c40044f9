#include "escapelab/report.hpp"

#include <charconv>
#include <cmath>

namespace escapelab {

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

void write_survival_csv(std::ostream& out, const SurvivalSeries& s) {
  out << "n,count,survival_numerator,survival_denominator,survival_float\n";
  for (std::size_t n = 0; n <= s.horizon(); ++n) {
    // The count over m^(n+L) unreduced, so numerator == count.
    out << n << ',' << s.counts[n].get_str() << ',' << s.counts[n].get_str() << ',' << s.denominator(n).get_str()
        << ',' << format_double(to_double(s.measures[n])) << '\n';
  }
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "level,index,word,tau,corr_number,theta,rho,rho_asymptotic\n";
  for (const auto& r : rows) {
    out << r.level << ',' << r.index << ',' << r.word.str() << ',' << r.tau << ',' << r.corr_number.get_str() << ','
        << format_double(r.theta) << ',' << format_double(r.rho) << ',' << format_double(r.rho_asymptotic) << '\n';
  }
}

void write_mc_csv(std::ostream& out, const SurvivalEstimate& est) {
  out << "n,survivors,s_hat,ci_halfwidth\n";
  for (std::size_t n = 0; n <= est.horizon(); ++n)
    out << n << ',' << est.survivors[n] << ',' << format_double(est.s_hat[n]) << ','
        << format_double(est.ci_halfwidth[n]) << '\n';
}

namespace {

nlohmann::json rational_json(const Rational& q) {
  return {{"exact", to_string(q)}, {"value", to_double(q)}};
}

nlohmann::json number_or_string(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

}  // namespace

nlohmann::json to_json(const EscapeReport& r) {
  nlohmann::json j = {{"theta", r.theta},
                      {"rho", number_or_string(r.rho)},
                      {"tau", r.tau},
                      {"engine", std::string(to_string(r.engine))},
                      {"tolerance", r.tolerance},
                      {"engines_agree", r.engines_agree},
                      {"alphabet", r.alphabet},
                      {"pattern_length", r.pattern_length},
                      {"pattern_count", r.pattern_count},
                      {"hole_measure", rational_json(r.hole_measure)}};
  if (r.corr_number) j["corr_number"] = r.corr_number->get_str();
  if (r.theta_root) j["theta_root"] = *r.theta_root;
  if (r.theta_matrix) j["theta_matrix"] = *r.theta_matrix;
  return j;
}

nlohmann::json to_json(const SurvivalSeries& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t n = 0; n <= s.horizon(); ++n)
    rows.push_back({{"n", n},
                    {"count", s.counts[n].get_str()},
                    {"survival", to_string(s.measures[n])},
                    {"survival_float", to_double(s.measures[n])}});
  return {{"pattern_length", s.pattern_length}, {"alphabet", s.alphabet}, {"series", rows}};
}

nlohmann::json to_json(const ScanRow& r) {
  return {{"level", r.level},       {"index", r.index}, {"word", r.word.str()},
          {"tau", r.tau},           {"corr_number", r.corr_number.get_str()},
          {"theta", r.theta},       {"rho", r.rho},     {"rho_asymptotic", r.rho_asymptotic}};
}

nlohmann::json to_json(const HoleComparison& c) {
  nlohmann::json j = {{"order", c.order}, {"tau_w", c.tau_w}, {"tau_u", c.tau_u},
                      {"rho_w", c.rho_w}, {"rho_u", c.rho_u}};
  j["threshold"] = c.threshold ? nlohmann::json(*c.threshold) : nlohmann::json(nullptr);
  j["survival_crossover"] = c.survival_crossover ? nlohmann::json(*c.survival_crossover) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const LocalEscape& e) {
  return {{"word", e.word.str()}, {"rho", e.rho}, {"measure", rational_json(e.measure)}, {"ratio", e.ratio}};
}

nlohmann::json to_json(const BigHole& h) {
  return {{"hole", h.hole.str()},
          {"base_word", h.base_word.str()},
          {"level", h.level},
          {"index", h.index},
          {"depth", h.depth},
          {"measure", rational_json(h.measure)},
          {"rho_base", h.rho_base},
          {"rho_union", number_or_string(h.rho_union)}};
}

nlohmann::json to_json(const EscapeBracket& b) {
  return {{"hole", IntervalUnion({b.hole}).str()},
          {"level", b.level},
          {"inner", b.inner.str()},
          {"outer", b.outer.str()},
          {"rho_inner", number_or_string(b.rho_inner)},
          {"rho_outer", number_or_string(b.rho_outer)}};
}

nlohmann::json to_json(const RotationEscape& r) {
  nlohmann::json j = {{"grid", r.grid}, {"escaped", r.escaped}, {"all_escaped", r.all_escaped()}};
  j["max_time"] = r.max_time ? nlohmann::json(*r.max_time) : nlohmann::json("not escaped");
  return j;
}

nlohmann::json to_json(const SurvivalEstimate& est) {
  nlohmann::json j = {{"samples", est.samples}, {"horizon", est.horizon()}, {"survivors", est.survivors},
                      {"s_hat", est.s_hat},     {"ci_halfwidth", est.ci_halfwidth}};
  if (!est.diagnostic.empty()) j["diagnostic"] = est.diagnostic;
  return j;
}

}  // namespace escapelab
