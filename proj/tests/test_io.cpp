#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "mbc/feasibility.hpp"
#include "mbc/io.hpp"
#include "support.hpp"

using namespace mbc;

TEST_CASE("parse_instance") {
  const auto raw = parse_instance(R"({"r": 1.5, "barriers": [[0, 2], [3, 4]], "sensors": [[1, 0], [2, -1]]})");
  CHECK(raw.r == 1.5);
  REQUIRE(raw.barriers.size() == 2);
  CHECK(raw.barriers[1].b == 4);
  REQUIRE(raw.sensors.size() == 2);
  CHECK(raw.sensors[1].y == -1);
  CHECK(raw.sensors[1].id == 1);
}

TEST_CASE("parse errors") {
  for (const char* bad : {"not json", R"({"r": 1})", R"({"r": 1, "barriers": [[0]], "sensors": []})",
                          R"({"r": "x", "barriers": [], "sensors": []})"}) {
    try {
      parse_instance(bad);
      FAIL("expected Parse for " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParse);
    }
  }
}

TEST_CASE("generate, save, load round trip is bit-exact") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenerateSpec spec;
    spec.n = 3 + seed % 5;
    spec.m = 1 + seed % 3;
    spec.r = 2.7;
    spec.seed = seed;
    spec.plane = seed % 2 == 0;
    const auto raw = generate(spec);
    const std::string path = "io_roundtrip_" + std::to_string(seed) + ".json";
    save_instance(raw, path);
    const auto back = load_instance(path);
    std::remove(path.c_str());
    CHECK(back.r == raw.r);
    REQUIRE(back.barriers.size() == raw.barriers.size());
    REQUIRE(back.sensors.size() == raw.sensors.size());
    for (std::size_t k = 0; k < raw.barriers.size(); ++k) {
      CHECK(back.barriers[k].a == raw.barriers[k].a);
      CHECK(back.barriers[k].b == raw.barriers[k].b);
    }
    for (std::size_t i = 0; i < raw.sensors.size(); ++i) {
      CHECK(back.sensors[i].x == raw.sensors[i].x);
      CHECK(back.sensors[i].y == raw.sensors[i].y);
    }
  }
}

TEST_CASE("generate") {
  GenerateSpec spec;
  spec.seed = 42;
  spec.n = 6;
  spec.m = 3;
  spec.r = 2;
  const auto a = generate(spec), b = generate(spec);
  CHECK(dump_instance(a) == dump_instance(b));
  for (const auto& s : a.sensors) CHECK(s.y == 0);

  spec.plane = true;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    spec.seed = seed;
    const auto inst = make_instance(generate(spec));
    CHECK_FALSE(validate_instance(inst).has_value());
    CHECK(validate_coverable(inst));
    for (const auto& s : inst.sensors) CHECK(std::fabs(s.y) <= spec.spread / 4);
  }

  spec.y_range = 0.75;
  const auto narrow = generate(spec);
  for (const auto& s : narrow.sensors) CHECK(std::fabs(s.y) <= 0.75);
  spec.y_range = 0;

  spec.grid = 0.5;
  const auto g = generate(spec);
  for (const auto& s : g.sensors) CHECK(std::fmod(s.x, 0.5) == 0);

  GenerateSpec tiny;
  tiny.n = 1;
  tiny.r = 0.01;
  tiny.m = 5;
  tiny.spread = 1000;
  try {
    generate(tiny);
    FAIL("expected SpecInfeasible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSpecInfeasible);
  }
}

TEST_CASE("placement_json") {
  const auto inst = support::make(1, {{5, 7}}, {{9, 0}});
  const auto d = decide_plane(inst, 3);
  REQUIRE(d.feasible);
  const auto j = nlohmann::json::parse(placement_json(inst, 3, *d.placement));
  CHECK(j["lambda"] == 3);
  CHECK(j["offset"] == 5);
  REQUIRE(j["positions"].size() == 1);
  const double p = j["positions"][0];
  CHECK(p + 5 >= 6 - 1e-12);
  CHECK(p + 5 <= 6 + 1e-12);
  CHECK(j.contains("max_move"));
}
