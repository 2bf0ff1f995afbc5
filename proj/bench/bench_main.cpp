// Serial reference kernels against their OpenMP versions, plus end-to-end
// decision and solver timings.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

#include "mbc/feasibility.hpp"
#include "mbc/io.hpp"
#include "mbc/kernels.hpp"
#include "mbc/oracle.hpp"
#include "mbc/solver_line.hpp"
#include "mbc/solver_mbc.hpp"
#include "mbc/successor.hpp"

namespace {

using namespace mbc;

struct Arrays {
  std::shared_ptr<std::vector<std::vector<double>>> data = std::make_shared<std::vector<std::vector<double>>>();
  std::vector<SortedArrayHandle> handles;
  std::vector<kernels::ActiveRange> ranges;
};

// N sorted arrays of length M behind closures, like the candidate arrays.
Arrays make_arrays(std::size_t count, std::size_t len) {
  Arrays a;
  std::mt19937_64 rng(count * 31 + len);
  std::uniform_real_distribution<double> u(0, 1000);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> v(len);
    for (auto& x : v) x = u(rng);
    std::sort(v.begin(), v.end());
    a.data->push_back(std::move(v));
  }
  for (const auto& v : *a.data) {
    a.handles.push_back({static_cast<std::int64_t>(v.size()), [data = a.data, p = &v](std::int64_t t) { return (*p)[t]; }});
    a.ranges.push_back({0, static_cast<std::int64_t>(v.size())});
  }
  return a;
}

template <bool Parallel>
void BM_RangeMedians(benchmark::State& state) {
  const auto a = make_arrays(static_cast<std::size_t>(state.range(0)), 1024);
  for (auto _ : state) {
    auto keys = Parallel ? kernels::range_medians_parallel(a.handles, a.ranges)
                         : kernels::range_medians_serial(a.handles, a.ranges);
    benchmark::DoNotOptimize(keys.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RangeMedians<false>)->Name("range_medians/serial")->RangeMultiplier(8)->Range(64, 32768);
BENCHMARK(BM_RangeMedians<true>)->Name("range_medians/openmp")->RangeMultiplier(8)->Range(64, 32768);

template <bool Parallel>
void BM_PruneRanges(benchmark::State& state) {
  const auto a = make_arrays(static_cast<std::size_t>(state.range(0)), 1024);
  for (auto _ : state) {
    auto ranges = a.ranges;
    if (Parallel) {
      kernels::prune_ranges_parallel(a.handles, ranges, 500, true);
    } else {
      kernels::prune_ranges_serial(a.handles, ranges, 500, true);
    }
    benchmark::DoNotOptimize(ranges.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PruneRanges<false>)->Name("prune_ranges/serial")->RangeMultiplier(8)->Range(64, 32768);
BENCHMARK(BM_PruneRanges<true>)->Name("prune_ranges/openmp")->RangeMultiplier(8)->Range(64, 32768);

std::vector<Sensor> random_sensors(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> x(0, 100), y(-25, 25);
  std::vector<Sensor> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = {x(rng), y(rng), i};
  std::sort(s.begin(), s.end(), [](const Sensor& a, const Sensor& b) { return a.x < b.x; });
  return s;
}

template <bool Parallel>
void BM_CrossingRoots(benchmark::State& state) {
  const auto s = random_sensors(static_cast<std::size_t>(state.range(0)));
  const ToleranceConfig tol;
  for (auto _ : state) {
    auto roots = Parallel ? kernels::crossing_roots_parallel(s, 25, 200, tol)
                          : kernels::crossing_roots_serial(s, 25, 200, tol);
    benchmark::DoNotOptimize(roots.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CrossingRoots<false>)->Name("crossing_roots/serial")->RangeMultiplier(2)->Range(64, 2048);
BENCHMARK(BM_CrossingRoots<true>)->Name("crossing_roots/openmp")->RangeMultiplier(2)->Range(64, 2048);

template <class Successor>
void BM_Successor(benchmark::State& state) {
  const auto universe = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(universe);
  std::vector<std::size_t> keys(universe);
  for (auto& k : keys) k = rng() % universe;
  for (auto _ : state) {
    Successor s(universe);
    std::size_t acc = 0;
    for (std::size_t k : keys) {
      s.insert(k);
      acc += s.min();
      if (k % 3 == 0) s.erase(s.min());
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Successor<BucketedSuccessor>)->Name("successor/bucketed")->RangeMultiplier(16)->Range(1 << 8, 1 << 20);
BENCHMARK(BM_Successor<LayeredSuccessor>)->Name("successor/layered")->RangeMultiplier(16)->Range(1 << 8, 1 << 20);

Instance bench_instance(std::size_t n, std::size_t m, bool plane) {
  GenerateSpec g;
  g.n = n;
  g.m = m;
  g.spread = 10.0 * static_cast<double>(std::max(n, m));
  g.r = 0.5 * g.spread / static_cast<double>(n);
  g.y_range = 2 * g.r;
  g.seed = 1;
  g.plane = plane;
  return make_instance(generate(g));
}

void BM_DecidePlane(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = bench_instance(n, n, true);
  const double probe = inst.max_abs_y() + inst.r;
  for (auto _ : state) benchmark::DoNotOptimize(decide_plane(inst, probe).feasible);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DecidePlane)->Name("decide_plane")->RangeMultiplier(4)->Range(256, 65536)->Complexity();

void BM_SolveLine(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = bench_instance(n, n, false);
  for (auto _ : state) benchmark::DoNotOptimize(solve_line(inst).lambda_star);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveLine)->Name("solve_line")->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_SolvePlane(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = bench_instance(n, std::max<std::size_t>(1, n / 4), true);
  for (auto _ : state) benchmark::DoNotOptimize(solve_plane(inst, {{}, Parallel}).lambda_star);
}
BENCHMARK(BM_SolvePlane<false>)->Name("solve_plane/serial_presort")->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolvePlane<true>)->Name("solve_plane/openmp_presort")->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_OracleDecide(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = bench_instance(n, 3, true);
  const double probe = inst.max_abs_y() + inst.r;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? oracle_decide(inst, probe) : oracle_decide_serial(inst, probe));
  }
}
BENCHMARK(BM_OracleDecide<false>)->Name("oracle_decide/serial")->DenseRange(6, 10, 2);
BENCHMARK(BM_OracleDecide<true>)->Name("oracle_decide/openmp")->DenseRange(6, 10, 2);

}  // namespace

BENCHMARK_MAIN();
