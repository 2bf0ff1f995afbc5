#pragma once

namespace mbc {

// Slack used when comparing computed quantities. Comparisons between raw
// input values are always exact.
struct ToleranceConfig {
  double eps_cmp = 1e-9;
  double eps_root = 1e-12;
  double eps_accept = 1e-6;

  bool valid() const { return 0 < eps_root && eps_root <= eps_cmp && eps_cmp <= eps_accept; }

  // Defaults, with eps_cmp taken from BARRIER_COVER_EPS when it is set and parses.
  static ToleranceConfig from_env();
};

// a <= b once values within eps of each other are snapped together.
inline bool snap_le(double a, double b, double eps) { return a <= b + eps; }

// a < b where a value within eps of b counts as equal (and thus not less).
inline bool snap_lt(double a, double b, double eps) { return a < b - eps; }

}  // namespace mbc
