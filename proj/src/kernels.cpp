#include "mbc/kernels.hpp"

#include <algorithm>
#include <exception>

#include "mbc/curves.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mbc::kernels {
namespace {

MedianKey median_of(const SortedArrayHandle& arr, std::size_t a, const ActiveRange& rg) {
  const std::int64_t mid = rg.lo + (rg.hi - rg.lo - 1) / 2;
  return {arr.eval(mid), a, mid, rg.hi - rg.lo};
}

// First index in [lo, hi) whose value is >= pivot (strict = false) or > pivot.
std::int64_t partition_point(const SortedArrayHandle& arr, std::int64_t lo, std::int64_t hi, double pivot,
                             bool strict) {
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    const double v = arr.eval(mid);
    if (strict ? v <= pivot : v < pivot) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

void prune_one(const SortedArrayHandle& arr, ActiveRange& rg, double pivot, bool keep_below) {
  if (rg.lo >= rg.hi) return;
  if (keep_below) {
    rg.hi = partition_point(arr, rg.lo, rg.hi, pivot, false);
  } else {
    rg.lo = partition_point(arr, rg.lo, rg.hi, pivot, true);
  }
}

void roots_for(std::span<const Sensor> sensors, std::size_t i, double lo, double hi, const ToleranceConfig& tol,
               std::vector<double>& out) {
  for (std::size_t j = i + 1; j < sensors.size(); ++j) {
    if (auto root = solve_curve_event(right_reach(sensors[i]), right_reach(sensors[j]), lo, hi, tol)) {
      out.push_back(*root);
    }
    if (auto root = solve_curve_event(left_reach(sensors[i]), left_reach(sensors[j]), lo, hi, tol)) {
      out.push_back(*root);
    }
  }
}

}  // namespace

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

std::vector<MedianKey> range_medians_serial(std::span<const SortedArrayHandle> arrays,
                                            std::span<const ActiveRange> ranges) {
  std::vector<MedianKey> out;
  for (std::size_t a = 0; a < arrays.size(); ++a) {
    if (ranges[a].lo < ranges[a].hi) out.push_back(median_of(arrays[a], a, ranges[a]));
  }
  return out;
}

std::vector<MedianKey> range_medians_parallel(std::span<const SortedArrayHandle> arrays,
                                              std::span<const ActiveRange> ranges) {
  const auto count = static_cast<std::int64_t>(arrays.size());
  std::vector<MedianKey> all(arrays.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < count; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    if (ranges[ua].lo < ranges[ua].hi) all[ua] = median_of(arrays[ua], ua, ranges[ua]);
  }
  std::vector<MedianKey> out;
  for (const auto& mk : all) {
    if (mk.weight > 0) out.push_back(mk);
  }
  return out;
}

void prune_ranges_serial(std::span<const SortedArrayHandle> arrays, std::span<ActiveRange> ranges, double pivot,
                         bool keep_below) {
  for (std::size_t a = 0; a < arrays.size(); ++a) prune_one(arrays[a], ranges[a], pivot, keep_below);
}

void prune_ranges_parallel(std::span<const SortedArrayHandle> arrays, std::span<ActiveRange> ranges, double pivot,
                           bool keep_below) {
  const auto count = static_cast<std::int64_t>(arrays.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < count; ++a) {
    prune_one(arrays[static_cast<std::size_t>(a)], ranges[static_cast<std::size_t>(a)], pivot, keep_below);
  }
}

std::vector<double> crossing_roots_serial(std::span<const Sensor> sensors, double lo, double hi,
                                          const ToleranceConfig& tol) {
  std::vector<double> out;
  for (std::size_t i = 0; i < sensors.size(); ++i) roots_for(sensors, i, lo, hi, tol, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> crossing_roots_parallel(std::span<const Sensor> sensors, double lo, double hi,
                                            const ToleranceConfig& tol) {
  const auto count = static_cast<std::int64_t>(sensors.size());
  std::vector<std::vector<double>> per(sensors.size());
  std::vector<std::exception_ptr> errors(sensors.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    try {
      roots_for(sensors, ui, lo, hi, tol, per[ui]);
    } catch (...) {
      errors[ui] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<double> out;
  for (const auto& v : per) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mbc::kernels
