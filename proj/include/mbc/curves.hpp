#pragma once

// Functions of lambda built from one sensor's reach, and their crossings.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mbc/core.hpp"

namespace mbc {

// base + sign * sqrt(lambda^2 - y^2). sign == 0 gives the constant `base`.
struct Radical {
  double base = 0;
  int sign = 0;
  double y = 0;

  double operator()(double lambda) const { return sign == 0 ? base : base + sign * half_reach(y, lambda); }
};

inline Radical constant(double c) { return {c, 0, 0}; }
// x^r(lambda) + c
inline Radical right_reach(const Sensor& s, double c = 0) { return {s.x + c, 1, s.y}; }
// x^l(lambda) + c
inline Radical left_reach(const Sensor& s, double c = 0) { return {s.x + c, -1, s.y}; }

// The frontier of the parametric driver: a constant, or x_j^r(lambda) + c.
struct RFunction {
  enum class Kind { kConstant, kCurve };
  Kind kind = Kind::kConstant;
  std::size_t sensor = 0;  // index into Instance::sensors, for kCurve
  double c = 0;

  static RFunction make_constant(double c) { return {Kind::kConstant, 0, c}; }
  static RFunction make_curve(std::size_t j, double c) { return {Kind::kCurve, j, c}; }

  bool is_curve() const { return kind == Kind::kCurve; }
  Radical radical(const Instance& inst) const {
    return is_curve() ? right_reach(inst.sensors[sensor], c) : constant(c);
  }
  double at(const Instance& inst, double lambda) const { return radical(inst)(lambda); }
};

// The unique lambda in the open interval (lo, hi) with f(lambda) == g(lambda),
// or nullopt. Closed form first, validated by substitution; bisection when the
// closed form is ambiguous. Throws NumericalFailure when bisection stalls.
std::optional<double> solve_curve_event(const Radical& f, const Radical& g, double lo, double hi,
                                        const ToleranceConfig& tol = {});

inline std::optional<double> solve_curve_event(const Instance& inst, const RFunction& R, const Radical& target,
                                               double lo, double hi, const ToleranceConfig& tol = {}) {
  return solve_curve_event(R.radical(inst), target, lo, hi, tol);
}

// Lower envelope of x_k^r over (lo, hi). `owners[p]` is the lowest curve on
// the p-th piece, pieces separated by the increasing `breakpoints`.
struct Envelope {
  std::vector<double> breakpoints;
  std::vector<std::size_t> owners;

  std::size_t owner_at(double lambda) const;
};

// `sensors` lists indices into inst.sensors; among curves equal at a point the
// one listed first wins. Divide and conquer, O(k log k) solves.
Envelope lower_envelope(const Instance& inst, std::span<const std::size_t> sensors, double lo, double hi,
                        const ToleranceConfig& tol = {});

}  // namespace mbc
