#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mbc/core.hpp"
#include "mbc/io.hpp"

namespace support {

inline mbc::Instance make(double r, std::vector<std::pair<double, double>> barriers,
                          std::vector<std::pair<double, double>> sensors) {
  mbc::RawInstance raw;
  raw.r = r;
  for (auto [a, b] : barriers) raw.barriers.push_back({a, b});
  for (auto [x, y] : sensors) raw.sensors.push_back({x, y, 0});
  return mbc::make_instance(raw);
}

inline mbc::Instance line(double r, std::vector<std::pair<double, double>> barriers, std::vector<double> xs) {
  std::vector<std::pair<double, double>> s;
  for (double x : xs) s.emplace_back(x, 0.0);
  return make(r, std::move(barriers), std::move(s));
}

// Random coverable instance with r near spread / (2n).
inline mbc::Instance random_instance(std::uint64_t seed, std::size_t n, std::size_t m, bool plane,
                                     double grid = 0) {
  std::mt19937_64 rng(seed * 7919 + 17);
  std::uniform_real_distribution<double> scale(1.0, 1.6);
  mbc::GenerateSpec spec;
  spec.n = n;
  spec.m = m;
  spec.spread = 20;
  spec.r = spec.spread / (2.0 * static_cast<double>(n)) * scale(rng);
  if (grid > 0) spec.r = std::max(grid, std::round(spec.r / grid) * grid);
  spec.seed = seed;
  spec.plane = plane;
  spec.grid = grid;
  return mbc::make_instance(mbc::generate(spec));
}

// The decisions accept gaps up to eps_cmp; the rest absorbs rounding in p +- r.
constexpr double kCoverSlack = 1e-9 + 1e-12;

// Interval-union sweep written independently of mbc::covers_barriers.
inline bool union_covers(const mbc::Instance& inst, const std::vector<double>& positions, double slack) {
  std::vector<std::pair<double, double>> iv;
  for (double p : positions) iv.emplace_back(p - inst.r, p + inst.r);
  std::sort(iv.begin(), iv.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& [lo, hi] : iv) {
    if (!merged.empty() && lo <= merged.back().second + slack) {
      merged.back().second = std::max(merged.back().second, hi);
    } else {
      merged.emplace_back(lo, hi);
    }
  }
  for (const auto& bar : inst.barriers) {
    bool ok = false;
    for (const auto& [lo, hi] : merged) {
      if (lo <= bar.a + slack && bar.b <= hi + slack) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace support
