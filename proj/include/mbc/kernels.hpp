#pragma once

// Data-parallel kernels. Each has a serial reference used by the tests and by
// the benchmark target; the OpenMP version must produce identical output.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mbc/core.hpp"
#include "mbc/search.hpp"

namespace mbc::kernels {

bool openmp_enabled();

// Active index range [lo, hi) of one array during the sorted-array search.
struct ActiveRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct MedianKey {
  double value = 0;
  std::size_t array = 0;
  std::int64_t index = 0;
  std::int64_t weight = 0;
};

// Lower median of every non-empty active range.
std::vector<MedianKey> range_medians_serial(std::span<const SortedArrayHandle> arrays,
                                            std::span<const ActiveRange> ranges);
std::vector<MedianKey> range_medians_parallel(std::span<const SortedArrayHandle> arrays,
                                              std::span<const ActiveRange> ranges);

// Shrinks every range to drop elements >= pivot (keep_below) or <= pivot.
void prune_ranges_serial(std::span<const SortedArrayHandle> arrays, std::span<ActiveRange> ranges, double pivot,
                         bool keep_below);
void prune_ranges_parallel(std::span<const SortedArrayHandle> arrays, std::span<ActiveRange> ranges, double pivot,
                           bool keep_below);

// All lambda in the open interval (lo, hi) where two sensors' reach ends
// coincide: x_i + s_i(lambda) = x_j + s_j(lambda) and x_i - s_i = x_j - s_j.
// Output is sorted ascending.
std::vector<double> crossing_roots_serial(std::span<const Sensor> sensors, double lo, double hi,
                                          const ToleranceConfig& tol);
std::vector<double> crossing_roots_parallel(std::span<const Sensor> sensors, double lo, double hi,
                                            const ToleranceConfig& tol);

}  // namespace mbc::kernels
