#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "escapelab/avoid.hpp"
#include "escapelab/maps.hpp"

namespace escapelab {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit Philox4x32(std::uint64_t seed);
  Counter operator()(Counter counter) const;

  // 128 random bits for position `block` of stream `stream`, as two words.
  std::array<std::uint64_t, 2> block(std::uint64_t stream, std::uint64_t block) const;

 private:
  Key key_;
};

struct SimConfig {
  std::uint64_t samples = 1'000'000;
  std::size_t horizon = 40;
  std::uint64_t seed = 20240521;
  std::size_t precision = 0;  // orbit bits; 0 means horizon + 64
  std::size_t workers = 0;    // 0 means worker_count()
};

struct SurvivalEstimate {
  std::uint64_t samples = 0;
  std::vector<std::uint64_t> survivors;  // index n: avoided the hole at times 0..n
  std::vector<double> s_hat;
  std::vector<double> ci_halfwidth;  // 95% normal approximation plus 0.5/samples
  std::string diagnostic;            // set when the horizon had to be capped

  std::size_t horizon() const { return survivors.empty() ? 0 : survivors.size() - 1; }
};

// Survival curve of the map's invariant measure: Lebesgue for doubling,
// expanding, tent and baker; arcsine for logistic, sampled as
// y = sin^2(pi u / 2) with the orbit run exactly on the tent side.
// Streams are indexed by sample, so results do not depend on worker count.
SurvivalEstimate survival_mc(const MapSpec& map, const HoleSpec& hole, const SimConfig& cfg);

// True when |s_hat_n - s_n| <= z * sqrt(s_n (1 - s_n) / samples) + 0.5 / samples
// for every n in the common range.
bool agrees_with(const SurvivalEstimate& est, const SurvivalSeries& exact, double z = 3.0);

// Least-squares slope of -ln s_hat_n against n over [first, last].
double escape_rate_fit(const SurvivalEstimate& est, std::size_t first, std::size_t last);
double escape_rate_fit(const std::vector<double>& survival, std::size_t first, std::size_t last);

struct RotationEscape {
  std::uint64_t grid = 0;
  std::uint64_t escaped = 0;
  std::optional<std::size_t> max_time;  // empty when some point never escaped
  std::vector<std::uint32_t> times;     // per start point; horizon + 1 marks "not escaped"

  bool all_escaped() const { return escaped == grid; }
};

// Rotation x -> x + alpha mod 1 on a 64-bit fixed-point circle. Start points
// are k/grid + shift and the hole is [start, start + length) mod 1; shifting
// hole and grid together leaves every escape time unchanged.
RotationEscape rotation_escape(double alpha, double hole_start, double hole_length, std::uint64_t grid,
                               std::size_t horizon, double shift = 0);

}  // namespace escapelab
