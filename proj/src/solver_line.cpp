#include "mbc/solver_line.hpp"

#include <algorithm>

#include "mbc/candidates.hpp"
#include "mbc/feasibility.hpp"

namespace mbc {

namespace {

// Same union of intervals with the positions handed out in sensor order; on a
// line this never increases the largest move.
Placement in_sensor_order(const Instance& inst, const Placement& p, double eps) {
  std::vector<double> sorted = p.positions;
  std::sort(sorted.begin(), sorted.end());
  return make_placement(inst, std::move(sorted), eps);
}

}  // namespace

LineSolution solve_line(const Instance& inst, const LineSolveOptions& opts) {
  if (!inst.line_constrained()) throw Error(ErrorCode::kNotLineConstrained, "solve_line needs every y == 0");
  if (!validate_coverable(inst)) throw Error(ErrorCode::kUncoverable, "sensors cannot cover the barriers");

  LineSolution sol;
  auto feasible = [&](double v) { return decide_line(inst, v, opts.tol).feasible; };
  ++sol.feasibility_tests;
  if (feasible(0)) {
    sol.placement = in_sensor_order(inst, *decide_line(inst, 0, opts.tol).placement, opts.tol.eps_cmp);
    return sol;
  }

  const Lambda1Arrays left = build_lambda1_arrays(inst);
  const Lambda1Arrays right = mirror_lambda2(inst);
  const Lambda3Arrays pairs = lambda3_arrays(inst);

  auto run = [&](const std::vector<SortedArrayHandle>& arrays) -> std::optional<double> {
    const SearchResult res = find_smallest_feasible(arrays, feasible, opts.search);
    sol.feasibility_tests += res.feasibility_tests;
    if (!res.hit) return std::nullopt;
    return res.hit->value;
  };
  sol.left_min = run(handles(left));
  sol.right_min = run(handles(right));
  sol.pair_min = run(handles(pairs));

  std::optional<double> best;
  for (const auto& v : {sol.left_min, sol.right_min, sol.pair_min}) {
    if (v && (!best || *v < *best)) best = v;
  }
  if (!best) throw Error(ErrorCode::kNumericalFailure, "no candidate value is feasible");
  sol.lambda_star = *best;
  ++sol.feasibility_tests;
  Decision d = decide_line(inst, sol.lambda_star, opts.tol);
  if (!d.feasible) throw Error(ErrorCode::kNumericalFailure, "optimum failed the final decision");
  sol.placement = in_sensor_order(inst, *d.placement, opts.tol.eps_cmp);
  return sol;
}

}  // namespace mbc
