#pragma once

// Brute-force references for testing. They share no code with the solvers
// beyond the instance types and the reach formula.

#include "mbc/core.hpp"

namespace mbc {

// Tries every sensor ordering; each sensor extends the covered prefix as far
// as its reach allows. Throws TooLarge for n > 10.
bool oracle_decide(const Instance& inst, double lambda, const ToleranceConfig& tol = {});
// Same result without OpenMP.
bool oracle_decide_serial(const Instance& inst, double lambda, const ToleranceConfig& tol = {});

// Smallest feasible value among the explicitly enumerated line candidates.
// Cross-checks the greedy decision against oracle_decide at the answer.
double oracle_lambda_line(const Instance& inst, const ToleranceConfig& tol = {});

// Bisection on [0, lambda_max] to width 1e-12 max(1, lambda_max); the
// exhaustive decision for n <= 7, the plane sweep otherwise.
double oracle_lambda_plane(const Instance& inst, const ToleranceConfig& tol = {});

}  // namespace mbc
