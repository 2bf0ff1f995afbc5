#include "mbc/feasibility.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace mbc {
namespace {

Decision infeasible(std::vector<std::size_t> sequence) {
  Decision d;
  d.sequence = std::move(sequence);
  return d;
}

Decision feasible(const Instance& inst, std::vector<double> positions, std::vector<std::size_t> sequence,
                  double eps) {
  Decision d;
  d.feasible = true;
  d.placement = make_placement(inst, std::move(positions), eps);
  d.sequence = std::move(sequence);
  return d;
}

std::vector<double> input_positions(const Instance& inst) {
  std::vector<double> pos(inst.n());
  for (std::size_t k = 0; k < inst.n(); ++k) pos[k] = inst.sensors[k].x;
  return pos;
}

// Moves R off a gap or a right endpoint onto the next barrier's left endpoint.
// `j` is the barrier cursor, advanced monotonically.
double jump_over(std::span<const Barrier> bars, std::size_t& j, double R, double eps) {
  while (j < bars.size() && snap_le(bars[j].b, R, eps)) ++j;
  if (j < bars.size() && R < bars[j].a) R = bars[j].a;
  return R;
}

// Sensor flags: bit 0 set while the sensor's sweep events are live.
constexpr std::uint8_t kLive = 1;
// Bit 1 records that the sensor was moved from its C_0 location.
constexpr std::uint8_t kMoved = 2;

template <class Successor>
Decision sweep(const Instance& inst, std::span<const double> xr, std::span<const double> xl,
               const SensorOrder& order, const ToleranceConfig& tol) {
  const std::size_t n = inst.n();
  const double r = inst.r;
  const double eps = tol.eps_cmp;
  const double beta = inst.beta();

  std::vector<std::size_t> rank(n);
  for (std::size_t t = 0; t < n; ++t) rank[order.by_right[t]] = t;

  std::vector<std::uint8_t> flags(n, kLive);
  // S_i1: sensors enter and leave in x^r order, so a FIFO suffices.
  std::vector<std::size_t> fifo(n);
  std::size_t head = 0, tail = 0;
  Successor s2(n);  // S_i2 keyed by x^r rank

  std::size_t next_s2_insert = 0;  // over by_left, threshold x^l - r
  std::size_t next_left_ext = 0;   // over by_right, threshold x^r - r
  std::size_t next_right_ext = 0;  // over by_right, threshold x^r + r

  std::vector<double> pos = input_positions(inst);
  std::vector<std::size_t> seq;
  double R = 0;
  std::size_t j = 0;

  for (;;) {
    while (next_s2_insert < n) {
      const std::size_t k = order.by_left[next_s2_insert];
      if (!snap_le(xl[k] - r, R, eps)) break;
      if (flags[k] & kLive) s2.insert(rank[k]);
      ++next_s2_insert;
    }
    while (next_left_ext < n) {
      const std::size_t k = order.by_right[next_left_ext];
      if (!snap_le(xr[k] - r, R, eps)) break;
      if (flags[k] & kLive) {
        fifo[tail++] = k;
        s2.erase(rank[k]);
      }
      ++next_left_ext;
    }
    while (next_right_ext < n) {
      const std::size_t k = order.by_right[next_right_ext];
      if (!snap_le(xr[k] + r, R, eps)) break;
      if (flags[k] & kLive) {
        // Insertion order equals deletion order for equal-length intervals.
        assert(head < tail && fifo[head] == k);
        ++head;
      }
      ++next_right_ext;
    }

    std::size_t g;
    if (head < tail) {
      g = fifo[head++];
      pos[g] = xr[g];
      R = xr[g] + r;
      flags[g] &= static_cast<std::uint8_t>(~kLive);
    } else if (!s2.empty()) {
      g = order.by_right[s2.min()];
      s2.erase(rank[g]);
      pos[g] = R + r;
      R = R + 2 * r;
      flags[g] = kMoved;
    } else {
      return infeasible(std::move(seq));
    }
    seq.push_back(g);
    if (snap_le(beta, R, eps)) return feasible(inst, std::move(pos), std::move(seq), eps);
    R = jump_over(inst.barriers, j, R, eps);
  }
}

Decision run_sweep(const Instance& inst, std::span<const double> xr, std::span<const double> xl,
                   const SensorOrder& order, const ToleranceConfig& tol, SuccessorKind kind) {
  if (kind == SuccessorKind::kLayered) return sweep<LayeredSuccessor>(inst, xr, xl, order, tol);
  return sweep<BucketedSuccessor>(inst, xr, xl, order, tol);
}

void reach_ends(const Instance& inst, double lambda, std::vector<double>& xr, std::vector<double>& xl) {
  xr.resize(inst.n());
  xl.resize(inst.n());
  for (std::size_t k = 0; k < inst.n(); ++k) {
    const double h = half_reach(inst.sensors[k].y, lambda);
    xr[k] = inst.sensors[k].x + h;
    xl[k] = inst.sensors[k].x - h;
  }
}

SensorOrder sorted_order(std::span<const double> xr, std::span<const double> xl) {
  SensorOrder order;
  order.by_right.resize(xr.size());
  std::iota(order.by_right.begin(), order.by_right.end(), std::size_t{0});
  order.by_left = order.by_right;
  std::stable_sort(order.by_right.begin(), order.by_right.end(),
                   [&](std::size_t p, std::size_t q) { return xr[p] < xr[q]; });
  std::stable_sort(order.by_left.begin(), order.by_left.end(),
                   [&](std::size_t p, std::size_t q) { return xl[p] < xl[q]; });
  return order;
}

bool is_permutation_of_n(std::span<const std::size_t> perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t k : perm) {
    if (k >= n || seen[k]) return false;
    seen[k] = true;
  }
  return true;
}

}  // namespace

Decision decide_line(const Instance& inst, double lambda, const ToleranceConfig& tol) {
  for (const auto& s : inst.sensors) {
    if (s.y != 0) throw Error(ErrorCode::kNotLineConstrained, "sensor " + std::to_string(s.id) + " has y != 0");
  }
  const std::size_t n = inst.n();
  const double r = inst.r;
  const double eps = tol.eps_cmp;
  const double beta = inst.beta();

  std::vector<double> pos = input_positions(inst);
  std::vector<std::size_t> seq;
  double p = 0;
  std::size_t j = 0;
  for (std::size_t i = 0;; ++i) {
    if (i == n) return infeasible(std::move(seq));
    const double xr = inst.sensors[i].x + lambda;
    if (snap_le(xr + r, p, eps)) continue;  // cannot reach past p
    if (snap_le(xr - r, p, eps)) {
      pos[i] = xr;
      p = xr + r;
    } else if (snap_le(xr - 2 * lambda - r, p, eps)) {
      pos[i] = p + r;
      p = p + 2 * r;
    } else {
      return infeasible(std::move(seq));
    }
    seq.push_back(i);
    if (snap_le(beta, p, eps)) return feasible(inst, std::move(pos), std::move(seq), eps);
    p = jump_over(inst.barriers, j, p, eps);
  }
}

SensorOrder order_at(const Instance& inst, double lambda) {
  std::vector<double> xr, xl;
  reach_ends(inst, lambda, xr, xl);
  return sorted_order(xr, xl);
}

Decision decide_plane(const Instance& inst, double lambda, const ToleranceConfig& tol) {
  if (lambda < inst.max_abs_y()) return {};
  std::vector<double> xr, xl;
  reach_ends(inst, lambda, xr, xl);
  const SensorOrder order = sorted_order(xr, xl);
  return run_sweep(inst, xr, xl, order, tol, SuccessorKind::kBucketed);
}

Decision decide_plane_presorted(const Instance& inst, double lambda, const SensorOrder& order,
                                const ToleranceConfig& tol, const PresortedOptions& opts) {
  if (lambda < inst.max_abs_y()) return {};
  std::vector<double> xr, xl;
  reach_ends(inst, lambda, xr, xl);
  if (opts.verify) {
    if (!is_permutation_of_n(order.by_right, inst.n()) || !is_permutation_of_n(order.by_left, inst.n()))
      throw Error(ErrorCode::kBadRankPermutation, "order is not a permutation of the sensors");
    for (std::size_t t = 0; t + 1 < inst.n(); ++t) {
      if (!snap_le(xr[order.by_right[t]], xr[order.by_right[t + 1]], tol.eps_cmp) ||
          !snap_le(xl[order.by_left[t]], xl[order.by_left[t + 1]], tol.eps_cmp)) {
        throw Error(ErrorCode::kBadRankPermutation, "order does not sort reach ends at rank " + std::to_string(t));
      }
    }
  }
  return run_sweep(inst, xr, xl, order, tol, opts.successor);
}

}  // namespace mbc
