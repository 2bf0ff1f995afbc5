#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace mbc {

// An implicitly stored nondecreasing array: eval(t) for t in [0, length).
struct SortedArrayHandle {
  std::int64_t length = 0;
  std::function<double(std::int64_t)> eval;
};

struct SearchOptions {
  // Remaining-element count at which pruning stops and the rest is sorted.
  std::int64_t cutoff = 64;
  // Run the per-array median and pruning passes with OpenMP.
  bool parallel = false;
};

struct SearchHit {
  double value = 0;
  std::size_t array = 0;
  std::int64_t index = 0;
};

struct SearchResult {
  std::optional<SearchHit> hit;  // empty when no element is feasible
  std::size_t feasibility_tests = 0;
};

// Smallest element v over all arrays with feasible(v), assuming feasibility is
// monotone. Uses a weighted median of per-array medians to discard at least a
// quarter of the remaining elements per test, so O(log N + log M) tests.
SearchResult find_smallest_feasible(std::span<const SortedArrayHandle> arrays,
                                    const std::function<bool(double)>& feasible, const SearchOptions& opts = {});

// As above; throws NoFeasibleElement when nothing is feasible.
SearchHit smallest_feasible(std::span<const SortedArrayHandle> arrays, const std::function<bool(double)>& feasible,
                            const SearchOptions& opts = {}, std::size_t* tests = nullptr);

}  // namespace mbc
