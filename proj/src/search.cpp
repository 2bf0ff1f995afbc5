#include "mbc/search.hpp"

#include <algorithm>
#include <tuple>

#include "mbc/errors.hpp"
#include "mbc/kernels.hpp"

namespace mbc {
namespace {

bool key_less(const kernels::MedianKey& p, const kernels::MedianKey& q) {
  return std::tie(p.value, p.array, p.index) < std::tie(q.value, q.array, q.index);
}

}  // namespace

SearchResult find_smallest_feasible(std::span<const SortedArrayHandle> arrays,
                                    const std::function<bool(double)>& feasible, const SearchOptions& opts) {
  SearchResult res;
  auto test = [&](double v) {
    ++res.feasibility_tests;
    return feasible(v);
  };
  const bool par = opts.parallel && kernels::openmp_enabled();

  std::optional<SearchHit> top;
  for (std::size_t a = 0; a < arrays.size(); ++a) {
    if (arrays[a].length <= 0) continue;
    const double v = arrays[a].eval(arrays[a].length - 1);
    if (!top || v > top->value) top = SearchHit{v, a, arrays[a].length - 1};
  }
  if (!top || !test(top->value)) return res;
  SearchHit incumbent = *top;

  std::vector<kernels::ActiveRange> ranges(arrays.size());
  for (std::size_t a = 0; a < arrays.size(); ++a) ranges[a] = {0, std::max<std::int64_t>(arrays[a].length, 0)};
  auto prune = [&](double pivot, bool keep_below) {
    if (par) {
      kernels::prune_ranges_parallel(arrays, ranges, pivot, keep_below);
    } else {
      kernels::prune_ranges_serial(arrays, ranges, pivot, keep_below);
    }
  };
  prune(incumbent.value, true);

  for (;;) {
    std::int64_t total = 0;
    for (const auto& rg : ranges) total += rg.hi - rg.lo;
    if (total <= opts.cutoff) break;

    auto meds = par ? kernels::range_medians_parallel(arrays, ranges) : kernels::range_medians_serial(arrays, ranges);
    std::sort(meds.begin(), meds.end(), key_less);
    std::int64_t acc = 0;
    const kernels::MedianKey* pivot = &meds.back();
    for (const auto& mk : meds) {
      acc += mk.weight;
      if (2 * acc >= total) {
        pivot = &mk;
        break;
      }
    }
    if (test(pivot->value)) {
      incumbent = SearchHit{pivot->value, pivot->array, pivot->index};
      prune(pivot->value, true);
    } else {
      prune(pivot->value, false);
    }
  }

  std::vector<kernels::MedianKey> rest;
  for (std::size_t a = 0; a < arrays.size(); ++a) {
    for (std::int64_t t = ranges[a].lo; t < ranges[a].hi; ++t) rest.push_back({arrays[a].eval(t), a, t, 1});
  }
  std::sort(rest.begin(), rest.end(), key_less);
  std::size_t lo = 0, hi = rest.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (test(rest[mid].value)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (hi < rest.size()) incumbent = SearchHit{rest[hi].value, rest[hi].array, rest[hi].index};
  res.hit = incumbent;
  return res;
}

SearchHit smallest_feasible(std::span<const SortedArrayHandle> arrays, const std::function<bool(double)>& feasible,
                            const SearchOptions& opts, std::size_t* tests) {
  SearchResult res = find_smallest_feasible(arrays, feasible, opts);
  if (tests) *tests = res.feasibility_tests;
  if (!res.hit) throw Error(ErrorCode::kNoFeasibleElement, "predicate is false at every array element");
  return *res.hit;
}

}  // namespace mbc
