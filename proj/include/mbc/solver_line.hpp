#pragma once

#include <cstddef>
#include <optional>

#include "mbc/core.hpp"
#include "mbc/search.hpp"

namespace mbc {

struct LineSolveOptions {
  ToleranceConfig tol;
  SearchOptions search;
};

struct LineSolution {
  double lambda_star = 0;
  Placement placement;
  // Smallest feasible element of the left, right and pairwise candidate arrays.
  std::optional<double> left_min, right_min, pair_min;
  std::size_t feasibility_tests = 0;
};

// Exact optimum for sensors on L: lambda* is the smallest feasible value over
// the three implicit candidate collections. Throws Uncoverable and
// NotLineConstrained.
LineSolution solve_line(const Instance& inst, const LineSolveOptions& opts = {});

}  // namespace mbc
