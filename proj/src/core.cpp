#include "mbc/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace mbc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateBarrier: return "DegenerateBarrier";
    case ErrorCode::kOverlappingBarriers: return "OverlappingBarriers";
    case ErrorCode::kUnsortedInput: return "UnsortedInput";
    case ErrorCode::kInvalidRange: return "InvalidRange";
    case ErrorCode::kEmptyInstance: return "EmptyInstance";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kNotLineConstrained: return "NotLineConstrained";
    case ErrorCode::kUncoverable: return "Uncoverable";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kNoFeasibleElement: return "NoFeasibleElement";
    case ErrorCode::kBadRankPermutation: return "BadRankPermutation";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kSpecInfeasible: return "SpecInfeasible";
    case ErrorCode::kOracleDisagreement: return "OracleDisagreement";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateBarrier:
    case ErrorCode::kOverlappingBarriers:
    case ErrorCode::kUnsortedInput:
    case ErrorCode::kInvalidRange:
    case ErrorCode::kEmptyInstance:
    case ErrorCode::kNonFinite:
    case ErrorCode::kNotLineConstrained:
    case ErrorCode::kParse:
      return true;
    default:
      return false;
  }
}

ToleranceConfig ToleranceConfig::from_env() {
  ToleranceConfig cfg;
  if (const char* env = std::getenv("BARRIER_COVER_EPS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && std::isfinite(v) && v > 0) {
      cfg.eps_cmp = v;
      cfg.eps_root = std::min(cfg.eps_root, v);
      cfg.eps_accept = std::max(cfg.eps_accept, v);
    }
  }
  return cfg;
}

double Instance::max_abs_y() const {
  double best = 0;
  for (const auto& s : sensors) best = std::max(best, std::fabs(s.y));
  return best;
}

bool Instance::line_constrained() const {
  return std::all_of(sensors.begin(), sensors.end(), [](const Sensor& s) { return s.y == 0; });
}

ErrorCode to_error_code(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyInstance: return ErrorCode::kEmptyInstance;
    case ViolationKind::kNonFinite: return ErrorCode::kNonFinite;
    case ViolationKind::kInvalidRange: return ErrorCode::kInvalidRange;
    case ViolationKind::kDegenerateBarrier: return ErrorCode::kDegenerateBarrier;
    case ViolationKind::kOverlappingBarriers: return ErrorCode::kOverlappingBarriers;
    case ViolationKind::kUnsortedInput:
    case ViolationKind::kNotNormalized: return ErrorCode::kUnsortedInput;
  }
  return ErrorCode::kParse;
}

namespace {

Violation violation(ViolationKind kind, std::size_t index, const std::string& what) {
  return Violation{kind, index, what};
}

// Checks shared by raw and normalized instances.
std::optional<Violation> check_common(double r, std::span<const Barrier> barriers,
                                      std::span<const Sensor> sensors) {
  if (barriers.empty()) return violation(ViolationKind::kEmptyInstance, 0, "no barriers");
  if (sensors.empty()) return violation(ViolationKind::kEmptyInstance, 0, "no sensors");
  if (!std::isfinite(r)) return violation(ViolationKind::kNonFinite, 0, "range is not finite");
  if (!(r > 0)) return violation(ViolationKind::kInvalidRange, 0, "range must be positive");
  for (std::size_t k = 0; k < barriers.size(); ++k) {
    if (!std::isfinite(barriers[k].a) || !std::isfinite(barriers[k].b))
      return violation(ViolationKind::kNonFinite, k, "barrier " + std::to_string(k) + " is not finite");
  }
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    if (!std::isfinite(sensors[i].x) || !std::isfinite(sensors[i].y))
      return violation(ViolationKind::kNonFinite, i, "sensor " + std::to_string(i) + " is not finite");
  }
  for (std::size_t k = 0; k < barriers.size(); ++k) {
    if (!(barriers[k].a < barriers[k].b)) {
      return violation(ViolationKind::kDegenerateBarrier, k,
                       "barrier " + std::to_string(k) + " has a >= b");
    }
  }
  for (std::size_t k = 0; k + 1 < barriers.size(); ++k) {
    if (barriers[k + 1].a < barriers[k].a) {
      return violation(ViolationKind::kUnsortedInput, k + 1,
                       "barrier " + std::to_string(k + 1) + " starts before barrier " + std::to_string(k));
    }
    if (!(barriers[k].b < barriers[k + 1].a)) {
      return violation(ViolationKind::kOverlappingBarriers, k,
                       "barriers " + std::to_string(k) + " and " + std::to_string(k + 1) + " intersect");
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> validate_instance(const Instance& inst) {
  if (auto v = check_common(inst.r, inst.barriers, inst.sensors)) return v;
  if (inst.barriers.front().a != 0)
    return violation(ViolationKind::kNotNormalized, 0, "first barrier does not start at 0");
  for (std::size_t i = 0; i + 1 < inst.sensors.size(); ++i) {
    if (inst.sensors[i + 1].x < inst.sensors[i].x) {
      return violation(ViolationKind::kUnsortedInput, i + 1,
                       "sensor " + std::to_string(i + 1) + " is left of sensor " + std::to_string(i));
    }
  }
  return std::nullopt;
}

Instance make_instance(RawInstance raw, const NormalizeOptions& opts) {
  for (std::size_t i = 0; i < raw.sensors.size(); ++i) raw.sensors[i].id = i;
  if (opts.merge_touching && !raw.barriers.empty()) {
    std::vector<Barrier> merged{raw.barriers.front()};
    for (std::size_t k = 1; k < raw.barriers.size(); ++k) {
      if (raw.barriers[k].a == merged.back().b) {
        merged.back().b = raw.barriers[k].b;
      } else {
        merged.push_back(raw.barriers[k]);
      }
    }
    raw.barriers = std::move(merged);
  }
  if (auto v = check_common(raw.r, raw.barriers, raw.sensors)) throw Error(to_error_code(v->kind), v->message);

  Instance inst;
  inst.r = raw.r;
  inst.offset = raw.barriers.front().a;
  inst.barriers.reserve(raw.barriers.size());
  for (const auto& b : raw.barriers) inst.barriers.push_back({b.a - inst.offset, b.b - inst.offset});
  inst.sensors.reserve(raw.sensors.size());
  for (const auto& s : raw.sensors) inst.sensors.push_back({s.x - inst.offset, s.y, s.id});
  std::stable_sort(inst.sensors.begin(), inst.sensors.end(),
                   [](const Sensor& p, const Sensor& q) { return p.x < q.x; });
  // Shifting can collapse a barrier or a gap below representable width.
  if (auto v = validate_instance(inst)) throw Error(to_error_code(v->kind), v->message + " after normalization");
  return inst;
}

RawInstance restore(const Instance& inst) {
  RawInstance raw;
  raw.r = inst.r;
  for (const auto& b : inst.barriers) raw.barriers.push_back({b.a + inst.offset, b.b + inst.offset});
  raw.sensors.resize(inst.sensors.size());
  for (const auto& s : inst.sensors) raw.sensors[s.id] = {s.x + inst.offset, s.y, s.id};
  return raw;
}

std::size_t greedy_cover_count(const Instance& inst) {
  const double width = 2 * inst.r;
  std::size_t used = 0;
  double p = inst.barriers.front().a;
  for (const auto& bar : inst.barriers) {
    p = std::max(p, bar.a);
    if (p >= bar.b) continue;
    const double k = std::ceil((bar.b - p) / width);
    used += static_cast<std::size_t>(k);
    p += k * width;
  }
  return used;
}

bool validate_coverable(const Instance& inst) { return greedy_cover_count(inst) <= inst.n(); }

std::optional<Interval> reach_interval(const Sensor& s, double lambda) {
  if (lambda < std::fabs(s.y)) return std::nullopt;
  const double h = half_reach(s.y, lambda);
  return Interval{s.x - h, s.x + h};
}

double max_movement(std::span<const Sensor> sensors, std::span<const double> positions) {
  double best = 0;
  for (std::size_t i = 0; i < sensors.size(); ++i)
    best = std::max(best, std::hypot(sensors[i].x - positions[i], sensors[i].y));
  return best;
}

bool covers_barriers(std::span<const Barrier> barriers, std::span<const double> positions, double r,
                     double slack) {
  std::vector<double> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t next = 0;
  double reach = -std::numeric_limits<double>::infinity();  // covered up to here
  for (const auto& bar : barriers) {
    // Absorb every interval that starts inside the covered chain (or before bar.a).
    while (next < sorted.size() && sorted[next] - r <= std::max(bar.a, reach) + slack) {
      reach = std::max(reach, sorted[next] + r);
      ++next;
    }
    if (reach + slack < bar.b) return false;
  }
  return true;
}

Placement make_placement(const Instance& inst, std::vector<double> positions, double slack) {
  Placement pl;
  pl.max_move = max_movement(inst.sensors, positions);
  pl.covered = covers_barriers(inst.barriers, positions, inst.r, slack);
  pl.positions = std::move(positions);
  return pl;
}

}  // namespace mbc
