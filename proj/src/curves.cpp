#include "mbc/curves.hpp"

#include <algorithm>
#include <cmath>

namespace mbc {
namespace {

// Closed-form roots of f == g, before range checks.
std::vector<double> closed_form(const Radical& f, const Radical& g) {
  // s1 q1 - s2 q2 = D with q = sqrt(lambda^2 - y^2).
  const double D = g.base - f.base;
  const int s1 = f.sign, s2 = g.sign;
  std::vector<double> out;
  if (s1 == 0 && s2 == 0) return out;
  if (s1 == 0 || s2 == 0) {
    const int s = s1 != 0 ? s1 : -s2;
    const double y = s1 != 0 ? f.y : g.y;
    if (s * D >= 0) out.push_back(std::hypot(D, y));
    return out;
  }
  // q1^2 - q2^2 = y2^2 - y1^2, so (A - B)(A + B) = w with A = s1 q1, B = s2 q2.
  const double w = (g.y - f.y) * (g.y + f.y);
  if (D == 0) {
    if (s1 != s2) out.push_back(std::max(std::fabs(f.y), std::fabs(g.y)));
    return out;
  }
  const double A = (D + w / D) / 2;
  const double B = (w / D - D) / 2;
  // Sign consistency of A and B is left to the residual check of the caller.
  out.push_back(std::fabs(f.y) >= std::fabs(g.y) ? std::hypot(A, f.y) : std::hypot(B, g.y));
  return out;
}

int sign_of(double v, double slack) {
  if (v > slack) return 1;
  if (v < -slack) return -1;
  return 0;
}

}  // namespace

std::optional<double> solve_curve_event(const Radical& f, const Radical& g, double lo, double hi,
                                        const ToleranceConfig& tol) {
  if (!(lo < hi)) return std::nullopt;
  auto h = [&](double l) { return f(l) - g(l); };
  auto scale = [&](double l) { return std::max({1.0, std::fabs(f.base), std::fabs(g.base), std::fabs(l)}); };

  const int s_lo = sign_of(h(lo), tol.eps_root * scale(lo));
  const int s_hi = sign_of(h(hi), tol.eps_root * scale(hi));
  const bool bracketed = s_lo * s_hi < 0;

  auto bisect = [&]() -> double {
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = a + (b - a) / 2;
      if (b - a <= tol.eps_root * scale(mid) || mid <= a || mid >= b) return mid;
      if (sign_of(h(mid), 0) == s_lo) {
        a = mid;
      } else {
        b = mid;
      }
    }
    throw Error(ErrorCode::kNumericalFailure, "curve event bisection did not converge");
  };

  for (double cand : closed_form(f, g)) {
    if (!std::isfinite(cand) || !(cand > lo && cand < hi)) continue;
    const double res = std::fabs(h(cand));
    if (res <= tol.eps_root * scale(cand)) return cand;
    if (res <= tol.eps_cmp * scale(cand)) return bracketed ? bisect() : cand;
  }
  if (bracketed) return bisect();
  return std::nullopt;
}

std::size_t Envelope::owner_at(double lambda) const {
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), lambda);
  return owners[static_cast<std::size_t>(it - breakpoints.begin())];
}

namespace {

struct EnvelopeBuilder {
  const Instance& inst;
  std::span<const std::size_t> sensors;
  double lo, hi;
  const ToleranceConfig& tol;

  // Lower of the curves at list positions p and q at lambda; ties to the earlier.
  std::size_t lower(std::size_t p, std::size_t q, double lambda) const {
    const double vp = right_reach(inst.sensors[sensors[p]])(lambda);
    const double vq = right_reach(inst.sensors[sensors[q]])(lambda);
    if (vp != vq) return vp < vq ? p : q;
    return std::min(p, q);
  }

  static void append(Envelope& env, double from, std::size_t owner) {
    if (env.owners.empty()) {
      env.owners.push_back(owner);
    } else if (env.owners.back() != owner) {
      env.breakpoints.push_back(from);
      env.owners.push_back(owner);
    }
  }

  Envelope merge(const Envelope& L, const Envelope& E) const {
    std::vector<double> cuts{lo};
    std::merge(L.breakpoints.begin(), L.breakpoints.end(), E.breakpoints.begin(), E.breakpoints.end(),
               std::back_inserter(cuts));
    cuts.push_back(hi);
    Envelope out;
    for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
      const double a = cuts[t], b = cuts[t + 1];
      if (!(a < b)) continue;
      const double mid = a + (b - a) / 2;
      const std::size_t p = L.owner_at(mid), q = E.owner_at(mid);
      const auto root = solve_curve_event(right_reach(inst.sensors[sensors[p]]),
                                          right_reach(inst.sensors[sensors[q]]), a, b, tol);
      if (root) {
        append(out, a, lower(p, q, a + (*root - a) / 2));
        append(out, *root, lower(p, q, *root + (b - *root) / 2));
      } else {
        append(out, a, lower(p, q, mid));
      }
    }
    return out;
  }

  Envelope build(std::size_t first, std::size_t last) const {
    if (last - first == 1) return Envelope{{}, {first}};
    const std::size_t mid = first + (last - first) / 2;
    return merge(build(first, mid), build(mid, last));
  }
};

}  // namespace

Envelope lower_envelope(const Instance& inst, std::span<const std::size_t> sensors, double lo, double hi,
                        const ToleranceConfig& tol) {
  if (sensors.empty()) return {};
  EnvelopeBuilder builder{inst, sensors, lo, hi, tol};
  Envelope env = builder.build(0, sensors.size());
  for (auto& o : env.owners) o = sensors[o];
  return env;
}

}  // namespace mbc
