#pragma once

#include <cstdint>
#include <string>

#include "mbc/core.hpp"

namespace mbc {

// {"r": r, "barriers": [[a, b], ...], "sensors": [[x, y], ...]}. Throws Parse.
RawInstance parse_instance(const std::string& text);
RawInstance load_instance(const std::string& path);
// Input-frame instance; numbers use shortest round-trip formatting.
std::string dump_instance(const RawInstance& raw);
void save_instance(const RawInstance& raw, const std::string& path);

// {"lambda": l, "positions": [...], "offset": o, "max_move": m}. Positions are
// in input order, in the normalized frame.
std::string placement_json(const Instance& inst, double lambda, const Placement& p);

struct GenerateSpec {
  std::size_t n = 4;
  std::size_t m = 2;
  double r = 1;
  double spread = 20;
  std::uint64_t seed = 0;
  bool plane = false;
  // Plane sensors get y in [-y_range, y_range]; 0 means spread / 4.
  double y_range = 0;
  // When > 0, coordinates are rounded to multiples of this step.
  double grid = 0;
  int max_attempts = 1000;
};

// Seeded random instance that passes validation and is coverable. Throws
// SpecInfeasible when 2rn cannot cover the barriers the spec can produce.
RawInstance generate(const GenerateSpec& spec);

}  // namespace mbc
