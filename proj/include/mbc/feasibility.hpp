#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mbc/core.hpp"
#include "mbc/successor.hpp"

namespace mbc {

// Outcome of one feasibility test.
struct Decision {
  bool feasible = false;
  std::optional<Placement> placement;  // set iff feasible
  // Sensors (indices into Instance::sensors) in the order the sweep chose them.
  std::vector<std::size_t> sequence;
};

// Greedy line-constrained decision: shift every sensor right by lambda, then
// sweep the frontier across the barriers moving sensors left as little as
// possible. O(n + m). Throws NotLineConstrained if some y != 0.
Decision decide_line(const Instance& inst, double lambda, const ToleranceConfig& tol = {});

// Orders of the sensors by rightmost (x^r) and leftmost (x^l) reachable
// location at a given lambda. Entries are indices into Instance::sensors.
struct SensorOrder {
  std::vector<std::size_t> by_right;
  std::vector<std::size_t> by_left;
};

// Sorts x^r and x^l at lambda (ties by sensor index). Requires lambda >= max|y|.
SensorOrder order_at(const Instance& inst, double lambda);

// Plane decision algorithm: sweep configuration C_0 (every sensor at x^r),
// picking from the FIFO of sensors covering p+(R), or else the leftmost sensor
// that can be moved back to cover it, with jump-over across barrier gaps.
// O(m + n log n).
Decision decide_plane(const Instance& inst, double lambda, const ToleranceConfig& tol = {});

struct PresortedOptions {
  SuccessorKind successor = SuccessorKind::kBucketed;
  // Check that `order` really sorts x^r and x^l at lambda (within eps_cmp).
#ifdef NDEBUG
  bool verify = false;
#else
  bool verify = true;
#endif
};

// Same decision and placement as decide_plane when `order` is the sorted order
// at lambda, without sorting. Throws BadRankPermutation when verification is
// enabled and fails.
Decision decide_plane_presorted(const Instance& inst, double lambda, const SensorOrder& order,
                                const ToleranceConfig& tol = {}, const PresortedOptions& opts = {});

}  // namespace mbc
