#pragma once

#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "escapelab/avoid.hpp"
#include "escapelab/maps.hpp"
#include "escapelab/simulate.hpp"
#include "escapelab/spectral.hpp"

namespace escapelab {

// Shortest round-trip decimal form of a double.
std::string format_double(double x);

// n,count,survival_numerator,survival_denominator,survival_float
void write_survival_csv(std::ostream& out, const SurvivalSeries& s);
// level,index,word,tau,corr_number,theta,rho,rho_asymptotic
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);
// n,survivors,s_hat,ci_halfwidth
void write_mc_csv(std::ostream& out, const SurvivalEstimate& est);

nlohmann::json to_json(const EscapeReport& r);
nlohmann::json to_json(const SurvivalSeries& s);
nlohmann::json to_json(const ScanRow& row);
nlohmann::json to_json(const HoleComparison& c);
nlohmann::json to_json(const LocalEscape& e);
nlohmann::json to_json(const BigHole& h);
nlohmann::json to_json(const EscapeBracket& b);
nlohmann::json to_json(const RotationEscape& r);
nlohmann::json to_json(const SurvivalEstimate& est);

}  // namespace escapelab
