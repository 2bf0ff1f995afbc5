#include "mbc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "mbc/feasibility.hpp"

namespace mbc {
namespace {

struct Search {
  const Instance& inst;
  double lambda;
  double eps;
  std::vector<double> lo, hi;  // reach interval per sensor
  std::unordered_map<std::uint32_t, double> best;

  // Frontier after skipping every barrier already covered up to R.
  double settle(double R) const {
    for (const auto& b : inst.barriers) {
      if (R + eps < b.b) return std::max(R, b.a);
    }
    return std::max(R, inst.beta());
  }

  bool done(double R) const { return R + eps >= inst.beta(); }

  // Frontier after placing sensor k as far right as contiguity allows, or
  // nothing when the sensor cannot extend it.
  bool extend(std::size_t k, double R, double& out) const {
    const double p = std::min(hi[k], R + inst.r);
    if (p + eps < lo[k]) return false;
    if (p + inst.r <= R) return false;
    out = settle(p + inst.r);
    return true;
  }

  bool dfs(std::uint32_t used, double R) {
    if (done(R)) return true;
    auto [it, fresh] = best.try_emplace(used, R);
    if (!fresh) {
      if (R <= it->second) return false;
      it->second = R;
    }
    for (std::size_t k = 0; k < inst.n(); ++k) {
      if (used & (1u << k)) continue;
      double next;
      if (extend(k, R, next) && dfs(used | (1u << k), next)) return true;
    }
    return false;
  }
};

bool prepare(const Instance& inst, double lambda, Search& s) {
  if (inst.n() > 10) throw Error(ErrorCode::kTooLarge, "oracle_decide enumerates orderings only for n <= 10");
  s.lo.resize(inst.n());
  s.hi.resize(inst.n());
  for (std::size_t k = 0; k < inst.n(); ++k) {
    const auto& sen = inst.sensors[k];
    if (std::fabs(sen.y) > lambda) return false;
    const double h = std::sqrt(std::max(0.0, lambda * lambda - sen.y * sen.y));
    s.lo[k] = sen.x - h;
    s.hi[k] = sen.x + h;
  }
  return true;
}

double lambda_max(const Instance& inst) {
  double up = 0;
  for (const auto& s : inst.sensors) {
    const double dx = std::max(std::fabs(s.x), std::fabs(s.x - inst.beta())) + inst.r;
    up = std::max(up, std::sqrt(dx * dx + s.y * s.y));
  }
  return up + inst.r;
}

}  // namespace

bool oracle_decide_serial(const Instance& inst, double lambda, const ToleranceConfig& tol) {
  Search s{inst, lambda, tol.eps_cmp, {}, {}, {}};
  if (!prepare(inst, lambda, s)) return false;
  return s.dfs(0, s.settle(0));
}

bool oracle_decide(const Instance& inst, double lambda, const ToleranceConfig& tol) {
  Search base{inst, lambda, tol.eps_cmp, {}, {}, {}};
  if (!prepare(inst, lambda, base)) return false;
  const double start = base.settle(0);
  if (base.done(start)) return true;
  const auto n = static_cast<std::int64_t>(inst.n());
  int found = 0;
#pragma omp parallel for schedule(dynamic) reduction(| : found)
  for (std::int64_t k = 0; k < n; ++k) {
    Search s = base;
    double next;
    const auto uk = static_cast<std::size_t>(k);
    if (s.extend(uk, start, next) && s.dfs(1u << uk, next)) found = 1;
  }
  return found != 0;
}

double oracle_lambda_line(const Instance& inst, const ToleranceConfig& tol) {
  if (!inst.line_constrained()) throw Error(ErrorCode::kNotLineConstrained, "oracle_lambda_line needs y == 0");
  if (!validate_coverable(inst)) throw Error(ErrorCode::kUncoverable, "sensors cannot cover the barriers");
  const std::size_t n = inst.n();
  const double r = inst.r;
  std::vector<double> cand{0.0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double span = 2 * r * static_cast<double>(j - i);
      const double xi = inst.sensors[i].x, xj = inst.sensors[j].x;
      for (const auto& b : inst.barriers) {
        cand.push_back(xj - (b.a + span + r));
        cand.push_back(b.b - r - span - xi);
      }
      if (i < j) cand.push_back((xj - xi - span) / 2);
    }
  }
  std::erase_if(cand, [](double v) { return v < 0; });
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  auto greedy = [&](double v) { return decide_line(inst, v, tol).feasible; };
  std::size_t lo = 0, hi = cand.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (greedy(cand[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (hi == cand.size()) throw Error(ErrorCode::kOracleDisagreement, "no enumerated candidate is feasible");
  if (n <= 10) {
    if (!oracle_decide(inst, cand[hi], tol)) {
      throw Error(ErrorCode::kOracleDisagreement, "exhaustive decision rejects the greedy optimum");
    }
    if (hi > 0 && oracle_decide(inst, cand[hi - 1], tol)) {
      throw Error(ErrorCode::kOracleDisagreement, "exhaustive decision accepts a smaller candidate");
    }
  }
  return cand[hi];
}

double oracle_lambda_plane(const Instance& inst, const ToleranceConfig& tol) {
  if (!validate_coverable(inst)) throw Error(ErrorCode::kUncoverable, "sensors cannot cover the barriers");
  auto feasible = [&](double v) {
    return inst.n() <= 7 ? oracle_decide(inst, v, tol) : decide_plane(inst, v, tol).feasible;
  };
  if (feasible(0)) return 0;
  double lo = 0, hi = lambda_max(inst);
  while (!feasible(hi)) {
    lo = hi;
    hi *= 2;
  }
  const double width = 1e-12 * std::max(1.0, hi);
  for (int it = 0; it < 200 && hi - lo >= width; ++it) {
    const double mid = lo + (hi - lo) / 2;
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

}  // namespace mbc
