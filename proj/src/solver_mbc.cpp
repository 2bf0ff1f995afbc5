#include "mbc/solver_mbc.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mbc/kernels.hpp"

namespace mbc {
namespace {

// Sorted distinct values strictly inside iv, framed by iv.lo and iv.hi.
std::vector<double> framed(const Interval& iv, std::vector<double> events) {
  std::erase_if(events, [&](double v) { return !(v > iv.lo && v < iv.hi); });
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());
  events.insert(events.begin(), iv.lo);
  events.push_back(iv.hi);
  return events;
}

// values.front() is known infeasible and values.back() feasible; returns the
// adjacent pair (values[q-1], values[q]] with q the first feasible index.
Interval narrow(const std::vector<double>& values, const std::function<bool(double)>& feasible) {
  std::size_t lo = 0, hi = values.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(values[mid])) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {values[lo], values[hi]};
}

double midpoint(const Interval& iv) { return iv.lo + (iv.hi - iv.lo) / 2; }

double lambda_upper(const Instance& inst) {
  const double beta = inst.beta();
  double up = 0;
  for (const auto& s : inst.sensors) {
    up = std::max(up, std::hypot(std::max(std::fabs(s.x), std::fabs(s.x - beta)) + inst.r, s.y));
  }
  return up * (1 + 1e-9) + inst.r;
}

struct Driver {
  const Instance& inst;
  const ToleranceConfig& tol;
  SensorOrder order;
  PlaneSolution& sol;
  std::size_t step_tests = 0;

  bool feasible(double lambda) {
    ++sol.feasibility_tests;
    ++step_tests;
    const PresortedOptions opts{SuccessorKind::kBucketed, false};
    return decide_plane_presorted(inst, lambda, order, tol, opts).feasible;
  }

  // Whether the choices recorded so far are also the decision's first
  // choices at lambda. They can differ only through a tie at lambda itself.
  bool sequence_holds_at(double lambda) {
    ++sol.feasibility_tests;
    ++step_tests;
    const auto seq = decide_plane(inst, lambda, tol).sequence;
    return sol.sequence.size() <= seq.size() && std::equal(sol.sequence.begin(), sol.sequence.end(), seq.begin());
  }

  Interval narrow_events(const Interval& iv, std::vector<double> events) {
    return narrow(framed(iv, std::move(events)), [this](double l) { return feasible(l); });
  }
};

}  // namespace

PresortResult presort(const Instance& inst, const ToleranceConfig& tol, bool parallel) {
  if (!validate_coverable(inst)) throw Error(ErrorCode::kUncoverable, "sensors cannot cover the barriers");
  PresortResult res;
  auto feasible = [&](double l) {
    ++res.feasibility_tests;
    return decide_plane(inst, l, tol).feasible;
  };
  const double ymax = inst.max_abs_y();
  double up = lambda_upper(inst);
  for (int attempt = 0; !feasible(up); ++attempt) {
    if (attempt == 60) throw Error(ErrorCode::kNumericalFailure, "no feasible upper bound for lambda");
    up *= 2;
  }
  const Interval whole{ymax, up};
  std::vector<double> roots = parallel ? kernels::crossing_roots_parallel(inst.sensors, ymax, up, tol)
                                       : kernels::crossing_roots_serial(inst.sensors, ymax, up, tol);
  res.roots = roots.size();
  res.interval = narrow(framed(whole, std::move(roots)), feasible);
  res.order = order_at(inst, midpoint(res.interval));
  return res;
}

PlaneSolution solve_plane(const Instance& inst, const PlaneSolveOptions& opts) {
  if (!validate_coverable(inst)) throw Error(ErrorCode::kUncoverable, "sensors cannot cover the barriers");
  const ToleranceConfig& tol = opts.tol;
  const double eps = tol.eps_cmp;
  const double r = inst.r;
  const double beta = inst.beta();
  const std::size_t n = inst.n();

  PlaneSolution sol;
  auto finish = [&](double lambda, const char* why) {
    sol.lambda_star = lambda;
    sol.termination = why;
    Decision d = decide_plane(inst, lambda, tol);
    if (!d.feasible) throw Error(ErrorCode::kNumericalFailure, "optimum failed the final decision");
    sol.placement = std::move(*d.placement);
    return sol;
  };
  auto plain = [&](double l) {
    ++sol.feasibility_tests;
    return decide_plane(inst, l, tol).feasible;
  };
  if (plain(0)) return finish(0, "zero");
  const double ymax = inst.max_abs_y();
  if (ymax > 0 && plain(ymax)) return finish(ymax, "max_abs_y");

  PresortResult pre = presort(inst, tol, opts.parallel_presort);
  sol.feasibility_tests += pre.feasibility_tests;
  sol.presort_interval = pre.interval;
  Driver drv{inst, tol, std::move(pre.order), sol};
  // Ends a step at lambda* = hi. A choice made for the open interval that a tie
  // at hi overturns is not part of the sequence at lambda*.
  auto finish_at_hi = [&](double hi, const char* why) {
    if (!drv.sequence_holds_at(hi)) sol.sequence.pop_back();
    return finish(hi, why);
  };
  auto collapse_width = [&](double l) { return 4 * tol.eps_root * std::max(1.0, std::fabs(l)); };
  // Every lambda in the open interval is feasible while lo is not, so lambda*
  // sits at lo up to rounding: the flip was a float away from an event.
  auto finish_above = [&](const Interval& iv, const char* why) {
    const double v = iv.lo + collapse_width(iv.lo);
    if (v < iv.hi && drv.feasible(v)) return finish(v, why);
    return finish_at_hi(iv.hi, why);
  };

  Interval iv = sol.presort_interval;
  RFunction R = RFunction::make_constant(0);
  std::vector<bool> chosen(n, false);
  const auto& rank_order = drv.order.by_right;
  auto xr = [&](std::size_t k, double l) { return right_reach(inst.sensors[k])(l); };
  auto xl = [&](std::size_t k, double l) { return left_reach(inst.sensors[k])(l); };

  for (std::size_t step = 1; step <= n + 1; ++step) {
    if (iv.hi - iv.lo < collapse_width(iv.hi)) return finish(iv.hi, "collapsed");
    TraceStep ts;
    ts.step = step;
    drv.step_tests = 0;
    const double prev_hi = iv.hi;
    const Radical Rf = R.radical(inst);

    std::vector<double> events;
    for (std::size_t k = 0; k < n; ++k) {
      if (chosen[k]) continue;
      // The decision compares with snap_le, so its sets change where the two
      // sides differ by eps rather than where they meet.
      for (double c : {-r - eps, r - eps}) {
        if (auto root = solve_curve_event(Rf, right_reach(inst.sensors[k], c), iv.lo, iv.hi, tol)) {
          events.push_back(*root);
        }
      }
    }
    ts.s1_events = events.size();
    iv = drv.narrow_events(iv, std::move(events));

    double mid = midpoint(iv);
    double Rm = Rf(mid);
    std::optional<std::size_t> g;
    for (std::size_t k : rank_order) {
      if (!chosen[k] && snap_le(xr(k, mid) - r, Rm, eps) && !snap_le(xr(k, mid) + r, Rm, eps)) {
        g = k;
        break;
      }
    }
    if (g) {
      R = RFunction::make_curve(*g, r);
      ts.source = TraceStep::Source::kS1;
    } else {
      const double hi_s1 = iv.hi;
      events.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (chosen[k]) continue;
        if (auto root = solve_curve_event(Rf, left_reach(inst.sensors[k], -r - eps), iv.lo, iv.hi, tol)) {
          events.push_back(*root);
        }
      }
      ts.s2_events = events.size();
      iv = drv.narrow_events(iv, std::move(events));
      mid = midpoint(iv);
      Rm = Rf(mid);
      std::vector<std::size_t> members;
      for (std::size_t k : rank_order) {
        if (!chosen[k] && snap_le(xl(k, mid) - r, Rm, eps) && !snap_le(xr(k, mid) - r, Rm, eps)) {
          members.push_back(k);
        }
      }
      if (members.empty()) {
        std::vector<double> last{iv.hi, hi_s1, prev_hi};
        std::sort(last.begin(), last.end());
        last.erase(std::unique(last.begin(), last.end()), last.end());
        for (double v : last) {
          if (drv.feasible(v)) return finish(v, "no_candidate_sensor");
        }
        throw Error(ErrorCode::kNumericalFailure, "no feasible value among the interval ends");
      }
      const Envelope env = lower_envelope(inst, members, iv.lo, iv.hi, tol);
      ts.envelope_breakpoints = env.breakpoints.size();
      iv = drv.narrow_events(iv, env.breakpoints);
      mid = midpoint(iv);
      g = members.front();
      for (std::size_t k : members) {
        if (xr(k, mid) < xr(*g, mid)) g = k;
      }
      R.c += 2 * r;
      ts.source = TraceStep::Source::kS2;
    }
    chosen[*g] = true;
    sol.sequence.push_back(*g);
    ts.sensor = *g;

    Radical Rn = R.radical(inst);
    if (snap_le(beta, Rn(iv.hi), eps)) {
      if (!R.is_curve()) return finish_above(iv, "constant_reached_beta");
      const double gap = beta - eps - Rn.base;
      const double at_beta = gap > 0 ? std::hypot(gap, Rn.y) : std::fabs(Rn.y);
      if (at_beta <= iv.lo) return finish_above(iv, "reached_beta_at_lo");
      if (at_beta < iv.hi) {
        if (!drv.feasible(at_beta)) return finish_above({at_beta, iv.hi}, "reached_beta_at_lo");
        iv.hi = at_beta;
        ts.hit_beta = true;
      }
    }

    const auto& bars = inst.barriers;
    auto first_open = [&](double x) {
      return std::partition_point(bars.begin(), bars.end(), [&](const Barrier& b) { return snap_le(b.b, x, eps); });
    };
    if (!R.is_curve()) {
      const auto it = first_open(R.c);
      if (it == bars.end()) return finish_above(iv, "constant_reached_beta");
      if (R.c < it->a) R = RFunction::make_constant(it->a);
    } else {
      events.clear();
      for (const auto& b : bars) {
        for (double e : {b.a, b.b - eps}) {
          if (auto root = solve_curve_event(Rn, constant(e), iv.lo, iv.hi, tol)) events.push_back(*root);
        }
      }
      ts.barrier_events = events.size();
      iv = drv.narrow_events(iv, std::move(events));
      const double Rmid = Rn(midpoint(iv));
      const auto it = first_open(Rmid);
      if (it == bars.end()) return finish_above(iv, "curve_reached_beta");
      if (Rmid < it->a) R = RFunction::make_constant(it->a);
    }
    if (!drv.sequence_holds_at(iv.hi)) {
      const double below = iv.hi - collapse_width(iv.hi);
      if (below <= iv.lo || !drv.feasible(below)) {
        sol.sequence.pop_back();
        return finish(iv.hi, "tie_at_hi");
      }
      iv.hi = below;
    }
    ts.lo = iv.lo;
    ts.hi = iv.hi;
    ts.R = R;
    ts.feasibility_tests = drv.step_tests;
    sol.trace.push_back(ts);
  }
  throw Error(ErrorCode::kNumericalFailure, "parametric driver did not terminate");
}

}  // namespace mbc
