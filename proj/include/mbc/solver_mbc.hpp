#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mbc/core.hpp"
#include "mbc/curves.hpp"
#include "mbc/feasibility.hpp"

namespace mbc {

struct PresortResult {
  SensorOrder order;  // orders of x^r and x^l, fixed on (lo, hi]
  Interval interval;  // lambda* in (lo, hi]
  std::size_t roots = 0;
  std::size_t feasibility_tests = 0;
};

// Enumerates every crossing of two x^r curves or two x^l curves in
// (max|y|, lambda_max), then binary searches them with decide_plane.
// Requires lambda* > max|y|. Throws Uncoverable.
PresortResult presort(const Instance& inst, const ToleranceConfig& tol = {}, bool parallel = false);

struct TraceStep {
  enum class Source { kS1, kS2 };
  std::size_t step = 0;
  double lo = 0, hi = 0;  // interval after the step
  std::size_t sensor = 0;
  Source source = Source::kS1;
  std::size_t s1_events = 0;
  std::size_t s2_events = 0;
  std::size_t envelope_breakpoints = 0;
  std::size_t barrier_events = 0;
  std::size_t feasibility_tests = 0;
  bool hit_beta = false;  // the frontier reached beta inside the interval
  RFunction R;            // frontier after jump-over
};

struct PlaneSolution {
  double lambda_star = 0;
  Placement placement;
  // Sensors chosen by the parametric driver, in order.
  std::vector<std::size_t> sequence;
  std::vector<TraceStep> trace;
  Interval presort_interval;
  std::size_t feasibility_tests = 0;
  std::string termination;
};

struct PlaneSolveOptions {
  ToleranceConfig tol;
  bool parallel_presort = false;
};

// Exact optimum by running the plane decision sweep with lambda as a
// parameter. Throws Uncoverable, NumericalFailure.
PlaneSolution solve_plane(const Instance& inst, const PlaneSolveOptions& opts = {});

}  // namespace mbc
