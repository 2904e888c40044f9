#include "escapelab/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "escapelab/parallel.hpp"

namespace escapelab {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint32_t kM0 = 0xD2511F53;
constexpr std::uint32_t kM1 = 0xCD9E8D57;
constexpr std::uint32_t kW0 = 0x9E3779B9;
constexpr std::uint32_t kW1 = 0xBB67AE85;

constexpr std::uint64_t kChunk = 1 << 14;

// floor(x * 2^64) for x in [0, 1]; 1 maps to 2^64.
u128 fixed_point(const Rational& x) {
  BigInt scaled = x.get_num();
  scaled <<= 64;
  scaled /= x.get_den();
  BigInt hi = scaled >> 64;
  BigInt lo = scaled - (hi << 64);
  u128 out = static_cast<u128>(hi.get_ui()) << 64;
  out |= static_cast<u128>(static_cast<std::uint64_t>(mpz_getlimbn(lo.get_mpz_t(), 0)));
  if (sizeof(mp_limb_t) < 8) throw Error("64-bit limbs required");
  return out;
}

class BitStream {
 public:
  BitStream(const Philox4x32& rng, std::uint64_t stream, std::size_t bits)
      : words_((bits + 63) / 64 + 2) {
    for (std::size_t b = 0; 2 * b < words_.size(); ++b) {
      auto pair = rng.block(stream, b);
      words_[2 * b] = pair[0];
      if (2 * b + 1 < words_.size()) words_[2 * b + 1] = pair[1];
    }
  }

  // 64 bits starting at bit position p, first bit most significant.
  std::uint64_t window(std::size_t p) const {
    const std::size_t i = p >> 6, r = p & 63;
    return r == 0 ? words_[i] : (words_[i] << r) | (words_[i + 1] >> (64 - r));
  }
  unsigned bit(std::size_t p) const { return static_cast<unsigned>(words_[p >> 6] >> (63 - (p & 63))) & 1U; }

 private:
  std::vector<std::uint64_t> words_;
};

// Uniform symbols in [0, kappa) by rejection on 32-bit draws.
class DigitStream {
 public:
  DigitStream(const Philox4x32& rng, std::uint64_t stream, unsigned kappa)
      : rng_(rng), stream_(stream), kappa_(kappa), limit_(static_cast<std::uint32_t>((std::uint64_t{1} << 32) -
                                                                                     (std::uint64_t{1} << 32) % kappa)) {}

  unsigned next() {
    while (true) {
      if (pos_ == 4) {
        refill();
      }
      const std::uint32_t v = buffer_[pos_++];
      if (v < limit_) return v % kappa_;
    }
  }

 private:
  void refill() {
    auto pair = rng_.block(stream_, block_++);
    buffer_ = {static_cast<std::uint32_t>(pair[0] >> 32), static_cast<std::uint32_t>(pair[0]),
               static_cast<std::uint32_t>(pair[1] >> 32), static_cast<std::uint32_t>(pair[1])};
    pos_ = 0;
  }

  const Philox4x32& rng_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  unsigned kappa_;
  std::uint32_t limit_;
  std::array<std::uint32_t, 4> buffer_{};
  std::size_t pos_ = 4;
};

struct FixedHole {
  std::vector<std::pair<u128, u128>> parts;
  bool contains(std::uint64_t v) const {
    for (const auto& [lo, hi] : parts)
      if (lo <= v && v < hi) return true;
    return false;
  }
};

FixedHole fixed_hole(const IntervalUnion& u) {
  FixedHole h;
  for (const auto& p : u.parts()) h.parts.emplace_back(fixed_point(p.lo), fixed_point(p.hi));
  return h;
}

std::vector<std::pair<double, double>> logistic_hole(const HoleSpec& hole) {
  std::vector<std::pair<double, double>> out;
  if (auto c = std::get_if<MarkovCylinder>(&hole)) {
    RealInterval y = logistic_cell(c->level, c->index);
    out.emplace_back(y.lo, y.hi);
  } else if (auto i = std::get_if<Interval>(&hole)) {
    out.emplace_back(to_double(i->lo), to_double(i->hi));
  } else if (auto u = std::get_if<IntervalUnion>(&hole)) {
    for (const auto& p : u->parts()) out.emplace_back(to_double(p.lo), to_double(p.hi));
  } else {
    throw Error("the logistic map takes interval or Markov holes");
  }
  return out;
}

}  // namespace

Philox4x32::Philox4x32(std::uint64_t seed)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

Philox4x32::Counter Philox4x32::operator()(Counter c) const {
  Key k = key_;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k[0] += kW0;
      k[1] += kW1;
    }
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c[2];
    c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
         static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
  }
  return c;
}

std::array<std::uint64_t, 2> Philox4x32::block(std::uint64_t stream, std::uint64_t block) const {
  Counter c = (*this)({static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
                       static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)});
  return {(static_cast<std::uint64_t>(c[0]) << 32) | c[1], (static_cast<std::uint64_t>(c[2]) << 32) | c[3]};
}

SurvivalEstimate survival_mc(const MapSpec& map, const HoleSpec& hole, const SimConfig& cfg) {
  if (cfg.samples == 0) throw Error("samples must be >= 1");
  if (map.kind == MapKind::rotation) throw Error("use rotation_escape for circle rotations");

  SurvivalEstimate est;
  est.samples = cfg.samples;
  std::size_t horizon = cfg.horizon;
  if (cfg.precision != 0 && cfg.precision < horizon + 64) {
    if (cfg.precision <= 64) throw Error("precision must exceed 64 bits");
    horizon = cfg.precision - 64;
    est.diagnostic = "horizon capped at " + std::to_string(horizon) + ": orbits consume one digit per step";
  }
  const std::size_t bits = horizon + 64;
  const Philox4x32 rng(cfg.seed);

  // first_hit(sample) in [0, horizon + 1]; horizon + 1 means never.
  std::function<std::size_t(std::uint64_t)> first_hit;
  FixedHole fixed;
  std::vector<std::pair<double, double>> y_hole;
  BakerRect rect;

  switch (map.kind) {
    case MapKind::doubling:
      fixed = fixed_hole(hole_intervals(map, hole));
      first_hit = [&](std::uint64_t s) {
        BitStream b(rng, s, bits);
        for (std::size_t n = 0; n <= horizon; ++n)
          if (fixed.contains(b.window(n))) return n;
        return horizon + 1;
      };
      break;
    case MapKind::tent:
      fixed = fixed_hole(hole_intervals(map, hole));
      first_hit = [&](std::uint64_t s) {
        BitStream b(rng, s, bits);
        for (std::size_t n = 0; n <= horizon; ++n) {
          const std::uint64_t flip = (n > 0 && b.bit(n - 1)) ? ~std::uint64_t{0} : 0;
          if (fixed.contains(b.window(n) ^ flip)) return n;
        }
        return horizon + 1;
      };
      break;
    case MapKind::logistic:
      y_hole = logistic_hole(hole);
      first_hit = [&](std::uint64_t s) {
        BitStream b(rng, s, bits);
        for (std::size_t n = 0; n <= horizon; ++n) {
          const std::uint64_t flip = (n > 0 && b.bit(n - 1)) ? ~std::uint64_t{0} : 0;
          const long double u = std::ldexp(static_cast<long double>(b.window(n) ^ flip), -64);
          const long double sine = std::sin(std::numbers::pi_v<long double> * u / 2);
          const double y = static_cast<double>(sine * sine);
          for (const auto& [lo, hi] : y_hole)
            if (lo <= y && y < hi) return n;
        }
        return horizon + 1;
      };
      break;
    case MapKind::expanding: {
      fixed = fixed_hole(hole_intervals(map, hole));
      const unsigned kappa = map.kappa;
      const std::size_t lookahead = static_cast<std::size_t>(std::ceil(64 / std::log2(kappa))) + 1;
      first_hit = [&, kappa, lookahead](std::uint64_t s) {
        DigitStream digits(rng, s, kappa);
        std::vector<unsigned> d(horizon + lookahead);
        for (auto& x : d) x = digits.next();
        for (std::size_t n = 0; n <= horizon; ++n) {
          u128 v = 0;
          for (std::size_t j = lookahead; j-- > 0;) v = ((static_cast<u128>(d[n + j]) << 64) + v) / kappa;
          if (fixed.contains(static_cast<std::uint64_t>(v))) return n;
        }
        return horizon + 1;
      };
      break;
    }
    case MapKind::baker: {
      const auto* r = std::get_if<BakerRect>(&hole);
      if (!r) throw Error("the baker map takes rect:N:M:i:j holes");
      rect = *r;
      code_hole(map, hole);  // validates the rectangle
      if (rect.x_level > 64 || rect.y_level > 64) throw Error("baker rectangle too fine to simulate");
      // Bits 0..63 hold the y digits nearest-first from position 63 down;
      // x digits start at 64. At time n the x digits start at 64 + n.
      first_hit = [&](std::uint64_t s) {
        BitStream b(rng, s, bits + 64);
        const std::uint64_t x_target = rect.i - 1, y_target = rect.j - 1;
        for (std::size_t n = 0; n <= horizon; ++n) {
          const std::size_t origin = 64 + n;
          const std::uint64_t x = b.window(origin) >> (64 - rect.x_level);
          if (x != x_target) continue;
          std::uint64_t y = 0;
          for (std::size_t t = 1; t <= rect.y_level; ++t) y = (y << 1) | b.bit(origin - t);
          if (y == y_target) return n;
        }
        return horizon + 1;
      };
      break;
    }
    case MapKind::rotation:
      break;
  }

  std::vector<std::uint64_t> hits(horizon + 2, 0);
  std::mutex merge;
  const std::size_t chunks = static_cast<std::size_t>((cfg.samples + kChunk - 1) / kChunk);
  parallel_for(
      chunks,
      [&](std::size_t c) {
        std::vector<std::uint64_t> local(horizon + 2, 0);
        const std::uint64_t end = std::min<std::uint64_t>(cfg.samples, (c + 1) * kChunk);
        for (std::uint64_t s = c * kChunk; s < end; ++s) ++local[first_hit(s)];
        std::lock_guard lock(merge);
        for (std::size_t k = 0; k < local.size(); ++k) hits[k] += local[k];
      },
      cfg.workers);

  est.survivors.resize(horizon + 1);
  std::uint64_t alive = cfg.samples;
  const double S = static_cast<double>(cfg.samples);
  for (std::size_t n = 0; n <= horizon; ++n) {
    alive -= hits[n];
    est.survivors[n] = alive;
    const double p = static_cast<double>(alive) / S;
    est.s_hat.push_back(p);
    est.ci_halfwidth.push_back(1.96 * std::sqrt(p * (1 - p) / S) + 0.5 / S);
  }
  return est;
}

bool agrees_with(const SurvivalEstimate& est, const SurvivalSeries& exact, double z) {
  const std::size_t top = std::min(est.horizon(), exact.horizon());
  const double S = static_cast<double>(est.samples);
  for (std::size_t n = 0; n <= top; ++n) {
    const double s = to_double(exact.measures[n]);
    if (std::abs(est.s_hat[n] - s) > z * std::sqrt(s * (1 - s) / S) + 0.5 / S) return false;
  }
  return true;
}

double escape_rate_fit(const std::vector<double>& survival, std::size_t first, std::size_t last) {
  if (first >= last || last >= survival.size()) throw Error("fit window must satisfy first < last <= horizon");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double count = static_cast<double>(last - first + 1);
  for (std::size_t n = first; n <= last; ++n) {
    if (!(survival[n] > 0)) throw Error("survival estimate vanishes inside the fit window");
    const double x = static_cast<double>(n), y = -std::log(survival[n]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

double escape_rate_fit(const SurvivalEstimate& est, std::size_t first, std::size_t last) {
  return escape_rate_fit(est.s_hat, first, last);
}

RotationEscape rotation_escape(double alpha, double hole_start, double hole_length, std::uint64_t grid,
                               std::size_t horizon, double shift) {
  if (!(alpha > 0 && alpha < 1)) throw Error("rotation angle must lie in (0, 1)");
  if (!(hole_length > 0)) throw Error("hole must have positive length");
  if (grid == 0) throw Error("grid must be >= 1");
  auto circle = [](double x) {
    long double f = static_cast<long double>(x) - std::floor(static_cast<long double>(x));
    return static_cast<std::uint64_t>(std::ldexp(f, 64));
  };
  const std::uint64_t step = circle(alpha);
  const std::uint64_t start = circle(hole_start);
  const std::uint64_t offset = circle(shift);
  const u128 length = hole_length >= 1 ? (u128{1} << 64) : static_cast<u128>(std::ldexp(static_cast<long double>(hole_length), 64));

  RotationEscape out;
  out.grid = grid;
  out.times.resize(grid);
  std::size_t worst = 0;
  for (std::uint64_t k = 0; k < grid; ++k) {
    std::uint64_t x = static_cast<std::uint64_t>((static_cast<u128>(k) << 64) / grid) + offset;
    std::size_t n = 0;
    while (n <= horizon && static_cast<u128>(static_cast<std::uint64_t>(x - start)) >= length) {
      x += step;
      ++n;
    }
    out.times[k] = static_cast<std::uint32_t>(n);
    if (n <= horizon) {
      ++out.escaped;
      worst = std::max(worst, n);
    }
  }
  if (out.all_escaped()) out.max_time = worst;
  return out;
}

}  // namespace escapelab
