#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbc/errors.hpp"
#include "mbc/tolerance.hpp"

namespace mbc {

// Closed segment [a, b] on the x-axis that must be covered.
struct Barrier {
  double a = 0;
  double b = 0;
};

struct Sensor {
  double x = 0;
  double y = 0;
  std::size_t id = 0;  // index in input order
};

// A problem instance in normalized form: barriers sorted and disjoint with
// a_1 == 0, sensors sorted by x (ties by input order). `offset` is the amount
// subtracted from every input x-coordinate during normalization.
struct Instance {
  std::vector<Barrier> barriers;
  std::vector<Sensor> sensors;
  double r = 1;
  double offset = 0;

  std::size_t n() const { return sensors.size(); }
  std::size_t m() const { return barriers.size(); }
  double beta() const { return barriers.back().b; }
  double max_abs_y() const;
  bool line_constrained() const;
};

// Final x-coordinates on L, indexed like Instance::sensors.
struct Placement {
  std::vector<double> positions;
  double max_move = 0;
  bool covered = false;
};

struct Interval {
  double lo = 0;
  double hi = 0;
};

enum class ViolationKind {
  kEmptyInstance,
  kNonFinite,
  kInvalidRange,
  kDegenerateBarrier,
  kOverlappingBarriers,
  kUnsortedInput,
  kNotNormalized,
};

struct Violation {
  ViolationKind kind;
  std::size_t index = 0;  // first offending barrier/sensor index
  std::string message;
};

ErrorCode to_error_code(ViolationKind kind);

// Returns the first violated Instance invariant, or nullopt when valid.
std::optional<Violation> validate_instance(const Instance& inst);

// Raw (input-frame) data accepted by make_instance.
struct RawInstance {
  double r = 1;
  std::vector<Barrier> barriers;
  std::vector<Sensor> sensors;  // ids are reassigned to input order
};

struct NormalizeOptions {
  // Merge barriers with b_k == a_{k+1} before validation.
  bool merge_touching = false;
};

// Validates raw input, shifts so that a_1 == 0 and sorts sensors.
// Throws Error with the violation's code.
Instance make_instance(RawInstance raw, const NormalizeOptions& opts = {});

// Inverse of make_instance: input-frame barriers/sensors in input order.
RawInstance restore(const Instance& inst);

// Whether unlimited movement suffices: greedy left-to-right packing of
// non-overlapping covering intervals needs at most n sensors.
bool validate_coverable(const Instance& inst);

// Number of sensors the greedy packing uses.
std::size_t greedy_cover_count(const Instance& inst);

// sqrt(lambda^2 - y^2) for lambda >= |y|; 0 at the boundary.
inline double half_reach(double y, double lambda) {
  const double ay = std::fabs(y);
  const double prod = (lambda - ay) * (lambda + ay);
  return prod > 0 ? std::sqrt(prod) : 0.0;
}

// Points of L reachable with movement at most lambda, or nullopt if lambda < |y|.
std::optional<Interval> reach_interval(const Sensor& s, double lambda);

// max_i sqrt((x_i - x'_i)^2 + y_i^2).
double max_movement(std::span<const Sensor> sensors, std::span<const double> positions);

// Interval-union sweep: do [x' - r, x' + r] cover every barrier, allowing gaps up to slack?
bool covers_barriers(std::span<const Barrier> barriers, std::span<const double> positions, double r,
                     double slack = 0);

// Builds a Placement from positions, recomputing max_move and coverage.
Placement make_placement(const Instance& inst, std::vector<double> positions, double slack = 0);

}  // namespace mbc
