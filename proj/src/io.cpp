#include "mbc/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace mbc {

using nlohmann::json;

RawInstance parse_instance(const std::string& text) {
  RawInstance raw;
  try {
    const json j = json::parse(text);
    raw.r = j.at("r").get<double>();
    for (const auto& b : j.at("barriers")) {
      if (b.size() != 2) throw Error(ErrorCode::kParse, "barrier must be [a, b]");
      raw.barriers.push_back({b[0].get<double>(), b[1].get<double>()});
    }
    for (const auto& s : j.at("sensors")) {
      if (s.size() != 2) throw Error(ErrorCode::kParse, "sensor must be [x, y]");
      raw.sensors.push_back({s[0].get<double>(), s[1].get<double>(), raw.sensors.size()});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  return raw;
}

RawInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string dump_instance(const RawInstance& raw) {
  json j;
  j["r"] = raw.r;
  j["barriers"] = json::array();
  for (const auto& b : raw.barriers) j["barriers"].push_back({b.a, b.b});
  j["sensors"] = json::array();
  for (const auto& s : raw.sensors) j["sensors"].push_back({s.x, s.y});
  return j.dump();
}

void save_instance(const RawInstance& raw, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path);
  out << dump_instance(raw) << '\n';
}

std::string placement_json(const Instance& inst, double lambda, const Placement& p) {
  std::vector<double> pos(inst.n());
  for (std::size_t k = 0; k < inst.n(); ++k) pos[inst.sensors[k].id] = p.positions[k];
  json j;
  j["lambda"] = lambda;
  j["positions"] = pos;
  j["offset"] = inst.offset;
  j["max_move"] = p.max_move;
  return j.dump();
}

RawInstance generate(const GenerateSpec& spec) {
  if (spec.n == 0 || spec.m == 0) throw Error(ErrorCode::kEmptyInstance, "generate needs n, m >= 1");
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> along(0.0, spec.spread);
  const double y_range = spec.y_range > 0 ? spec.y_range : spec.spread / 4;
  std::uniform_real_distribution<double> across(-y_range, y_range);
  auto snap = [&](double v) { return spec.grid > 0 ? std::round(v / spec.grid) * spec.grid : v; };

  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    RawInstance raw;
    raw.r = spec.r;
    std::vector<double> ends(2 * spec.m);
    for (auto& e : ends) e = snap(along(rng));
    std::sort(ends.begin(), ends.end());
    for (std::size_t k = 0; k < spec.m; ++k) raw.barriers.push_back({ends[2 * k], ends[2 * k + 1]});
    for (std::size_t i = 0; i < spec.n; ++i) {
      const double x = snap(along(rng));
      const double y = spec.plane ? snap(across(rng)) : 0.0;
      raw.sensors.push_back({x, y, i});
    }
    try {
      const Instance inst = make_instance(raw);
      if (validate_coverable(inst)) return raw;
    } catch (const Error&) {
      // Coinciding endpoints; draw again.
    }
  }
  throw Error(ErrorCode::kSpecInfeasible, "no coverable instance after " + std::to_string(spec.max_attempts) +
                                              " attempts; 2rn is too small for the spread");
}

}  // namespace mbc
