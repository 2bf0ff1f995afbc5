#include "mbc/candidates.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <string>

namespace mbc {
namespace {

// floor(x / y) for x >= 0, y > 0, computed exactly from fmod.
std::int64_t exact_floor_div(double x, double y) {
  const double d = std::fmod(x, y);
  return static_cast<std::int64_t>(std::llround((x - d) / y));
}

void check_index(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kIndexOutOfRange, what);
}

}  // namespace

double lambda1_value(std::size_t i, std::size_t j, std::size_t k, const Instance& inst) {
  check_index(1 <= i && i <= j && j <= inst.n(), "lambda1_value: need 1 <= i <= j <= n");
  check_index(1 <= k && k <= inst.m(), "lambda1_value: need 1 <= k <= m");
  const double r = inst.r;
  return inst.sensors[j - 1].x - (inst.barriers[k - 1].a + 2 * r * static_cast<double>(j - i) + r);
}

std::int64_t Lambda1Arrays::alpha(std::size_t g, std::size_t j) const {
  return groups[g].alpha_n - static_cast<std::int64_t>(n()) + static_cast<std::int64_t>(j);
}

std::int64_t Lambda1Arrays::beta(std::size_t g, std::size_t j) const {
  return groups[g].beta_n + groups[g].delta * (static_cast<std::int64_t>(j) - static_cast<std::int64_t>(n()));
}

std::int64_t Lambda1Arrays::length(std::size_t j) const { return groups.empty() ? 0 : beta(groups.size() - 1, j); }

double Lambda1Arrays::group_min(std::size_t g, std::size_t j) const {
  return xs[j - 1] - as[groups[g].k2 - 1] - 2 * r * static_cast<double>(j - 1) - r;
}

double Lambda1Arrays::eval(std::size_t j, std::int64_t t) const {
  check_index(1 <= j && j <= n(), "eval_B: need 1 <= j <= n");
  check_index(1 <= t && t <= length(j), "eval_B: t outside B[j]");
  std::size_t lo = 0, hi = groups.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (t <= beta(mid, j)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const std::size_t g = lo;
  const std::int64_t local = t - (g == 0 ? 0 : beta(g - 1, j)) - 1;
  const auto width = static_cast<std::int64_t>(groups[g].size());
  const std::int64_t h = local / width;
  const auto slot = static_cast<std::size_t>(local % width);
  return group_min(g, j) + groups[g].offsets[slot] + 2 * r * static_cast<double>(h);
}

Lambda1Arrays build_lambda1_arrays(std::span<const double> xs, std::span<const double> as, double r,
                                   CandidateSide side) {
  Lambda1Arrays arr;
  arr.side = side;
  arr.r = r;
  arr.xs.assign(xs.begin(), xs.end());
  arr.as.assign(as.begin(), as.end());
  const std::size_t n = xs.size(), m = as.size();
  if (n == 0 || m == 0) return arr;
  const double two_r = 2 * r;

  // Consecutive k stay together while lambda(1,n,k) <= lambda(n,n,k+1) + 2r,
  // i.e. a_{k+1} - a_k <= 2rn.
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  std::size_t start = 1;
  for (std::size_t k = 1; k < m; ++k) {
    if (as[k] - as[k - 1] > two_r * static_cast<double>(n)) {
      runs.emplace_back(start, k);
      start = k + 1;
    }
  }
  runs.emplace_back(start, m);
  std::reverse(runs.begin(), runs.end());

  std::int64_t beta = 0, delta = 0;
  for (const auto& [k1, k2] : runs) {
    CandidateGroup g;
    g.k1 = k1;
    g.k2 = k2;
    const double top = as[k2 - 1];
    std::vector<double> off(k2 - k1 + 1);
    for (std::size_t k = k1; k <= k2; ++k) off[k - k1] = std::fmod(top - as[k - 1], two_r);
    g.sigma.resize(off.size());
    std::iota(g.sigma.begin(), g.sigma.end(), k1);
    std::stable_sort(g.sigma.begin(), g.sigma.end(),
                     [&](std::size_t p, std::size_t q) { return off[p - k1] < off[q - k1]; });
    for (std::size_t k : g.sigma) g.offsets.push_back(off[k - k1]);
    g.alpha_n = static_cast<std::int64_t>(n) + exact_floor_div(top - as[k1 - 1], two_r);
    delta += static_cast<std::int64_t>(g.size());
    beta += g.alpha_n * static_cast<std::int64_t>(g.size());
    g.beta_n = beta;
    g.delta = delta;
    assert(g.alpha_n <= static_cast<std::int64_t>(g.size() * (n + 1)));
    arr.groups.push_back(std::move(g));
  }
  return arr;
}

Lambda1Arrays build_lambda1_arrays(const Instance& inst) {
  std::vector<double> xs(inst.n()), as(inst.m());
  for (std::size_t i = 0; i < inst.n(); ++i) xs[i] = inst.sensors[i].x;
  for (std::size_t k = 0; k < inst.m(); ++k) as[k] = inst.barriers[k].a;
  return build_lambda1_arrays(xs, as, inst.r, CandidateSide::kLeft);
}

double eval_B(std::size_t j, std::int64_t t, const Lambda1Arrays& arrays) { return arrays.eval(j, t); }

Lambda1Arrays mirror_lambda2(const Instance& inst) {
  std::vector<double> xs(inst.n()), as(inst.m());
  for (std::size_t i = 0; i < inst.n(); ++i) xs[i] = -inst.sensors[inst.n() - 1 - i].x;
  for (std::size_t k = 0; k < inst.m(); ++k) as[k] = -inst.barriers[inst.m() - 1 - k].b;
  return build_lambda1_arrays(xs, as, inst.r, CandidateSide::kRight);
}

Lambda3Arrays lambda3_arrays(const Instance& inst) {
  Lambda3Arrays arr;
  arr.z.resize(inst.n());
  for (std::size_t i = 0; i < inst.n(); ++i) {
    arr.z[i] = inst.sensors[i].x - 2 * inst.r * static_cast<double>(i + 1);
  }
  std::sort(arr.z.begin(), arr.z.end());
  return arr;
}

std::vector<SortedArrayHandle> handles(const Lambda1Arrays& arrays) {
  std::vector<SortedArrayHandle> out;
  for (std::size_t j = 1; j <= arrays.n(); ++j) {
    out.push_back({arrays.length(j), [&arrays, j](std::int64_t t) { return std::max(0.0, arrays.eval(j, t + 1)); }});
  }
  return out;
}

std::vector<SortedArrayHandle> handles(const Lambda3Arrays& arrays) {
  std::vector<SortedArrayHandle> out;
  const auto n = static_cast<std::int64_t>(arrays.n());
  for (std::size_t a = 1; a <= arrays.n(); ++a) {
    out.push_back({n, [&arrays, a](std::int64_t b) {
                     return std::max(0.0, arrays.eval(a, static_cast<std::size_t>(b + 1)));
                   }});
  }
  return out;
}

std::vector<CandidateValue> materialize(const Lambda1Arrays& arrays, std::size_t max_size) {
  std::vector<CandidateValue> out;
  const auto src = arrays.side == CandidateSide::kLeft ? CandidateValue::Source::kLambda1
                                                       : CandidateValue::Source::kLambda2;
  for (std::size_t j = 1; j <= arrays.n(); ++j) {
    const std::int64_t len = arrays.length(j);
    if (out.size() + static_cast<std::size_t>(len) > max_size) {
      throw Error(ErrorCode::kTooLarge, "candidate arrays exceed " + std::to_string(max_size) + " elements");
    }
    for (std::int64_t t = 1; t <= len; ++t) out.push_back({arrays.eval(j, t), src, j, t});
  }
  return out;
}

std::vector<CandidateValue> materialize(const Lambda3Arrays& arrays, std::size_t max_size) {
  const std::size_t n = arrays.n();
  if (n * n > max_size) {
    throw Error(ErrorCode::kTooLarge, "candidate arrays exceed " + std::to_string(max_size) + " elements");
  }
  std::vector<CandidateValue> out;
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = 1; b <= n; ++b) {
      out.push_back({arrays.eval(a, b), CandidateValue::Source::kLambda3, a, static_cast<std::int64_t>(b)});
    }
  }
  return out;
}

}  // namespace mbc
