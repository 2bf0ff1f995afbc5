#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>

#include "mbc/core.hpp"
#include "support.hpp"

using namespace mbc;

namespace {

Instance raw_normalized(double r, std::vector<Barrier> bars, std::vector<Sensor> sensors) {
  Instance inst;
  inst.r = r;
  inst.barriers = std::move(bars);
  inst.sensors = std::move(sensors);
  return inst;
}

ErrorCode make_error(RawInstance raw) {
  try {
    make_instance(std::move(raw));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kParse;
}

}  // namespace

TEST_CASE("validate_instance accepts the minimal instance") {
  CHECK_FALSE(validate_instance(raw_normalized(1, {{0, 1}}, {{0, 0, 0}})).has_value());
}

TEST_CASE("validate_instance names the violated invariant") {
  auto v = validate_instance(raw_normalized(1, {{0, 1}, {0.5, 2}}, {{0, 0, 0}}));
  REQUIRE(v);
  CHECK(v->kind == ViolationKind::kOverlappingBarriers);
  CHECK(v->index == 0);

  v = validate_instance(raw_normalized(1, {{0, 0}}, {{0, 0, 0}}));
  REQUIRE(v);
  CHECK(v->kind == ViolationKind::kDegenerateBarrier);

  v = validate_instance(raw_normalized(1, {{0, 1}, {3, 4}, {2, 2.5}}, {{0, 0, 0}}));
  REQUIRE(v);
  CHECK(v->kind == ViolationKind::kUnsortedInput);
  CHECK(v->index == 2);

  v = validate_instance(raw_normalized(1, {{0, 1}}, {{2, 0, 0}, {1, 0, 1}}));
  REQUIRE(v);
  CHECK(v->kind == ViolationKind::kUnsortedInput);

  v = validate_instance(raw_normalized(0, {{0, 1}}, {{0, 0, 0}}));
  REQUIRE(v);
  CHECK(v->kind == ViolationKind::kInvalidRange);

  v = validate_instance(raw_normalized(1, {{1, 2}}, {{0, 0, 0}}));
  REQUIRE(v);
  CHECK(v->kind == ViolationKind::kNotNormalized);

  v = validate_instance(raw_normalized(1, {}, {{0, 0, 0}}));
  REQUIRE(v);
  CHECK(v->kind == ViolationKind::kEmptyInstance);
}

TEST_CASE("make_instance maps violations to error codes") {
  CHECK(make_error({1, {{0, 1}, {0.5, 2}}, {{0, 0, 0}}}) == ErrorCode::kOverlappingBarriers);
  CHECK(make_error({1, {{0, 0}}, {{0, 0, 0}}}) == ErrorCode::kDegenerateBarrier);
  CHECK(make_error({1, {{2, 3}, {0, 1}}, {{0, 0, 0}}}) == ErrorCode::kUnsortedInput);
  CHECK(make_error({-1, {{0, 1}}, {{0, 0, 0}}}) == ErrorCode::kInvalidRange);
  CHECK(make_error({1, {{0, std::numeric_limits<double>::infinity()}}, {{0, 0, 0}}}) == ErrorCode::kNonFinite);
  CHECK(make_error({1, {{0, 1}}, {}}) == ErrorCode::kEmptyInstance);
  CHECK(make_error({1, {{0, 1}, {1, 2}}, {{0, 0, 0}}}) == ErrorCode::kOverlappingBarriers);
}

TEST_CASE("make_instance normalizes and merge_touching joins shared endpoints") {
  RawInstance raw{2, {{-1, 1}, {1, 3}, {5, 6}}, {{4, 1, 0}, {-2, 0, 0}, {4, -1, 0}}};
  const Instance inst = make_instance(raw, {true});
  REQUIRE(inst.m() == 2);
  CHECK(inst.offset == -1);
  CHECK(inst.barriers[0].a == 0);
  CHECK(inst.barriers[0].b == 4);
  CHECK(inst.barriers[1].a == 6);
  CHECK(inst.sensors[0].id == 1);
  CHECK(inst.sensors[1].id == 0);  // equal x keeps input order
  CHECK(inst.sensors[2].id == 2);
  CHECK_FALSE(validate_instance(inst).has_value());
}

TEST_CASE("restore inverts normalization") {
  RawInstance raw{0.75, {{-3.1, -1.7}, {0.3, 2.9}}, {{1.1, 0.2, 0}, {-5.3, -1, 0}, {0.1, 0, 0}}};
  const RawInstance back = restore(make_instance(raw));
  REQUIRE(back.sensors.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.sensors[i].x == doctest::Approx(raw.sensors[i].x).epsilon(1e-15));
    CHECK(back.sensors[i].y == raw.sensors[i].y);
  }
  CHECK(back.barriers[1].b == doctest::Approx(2.9).epsilon(1e-15));
  CHECK(back.barriers[0].a == -3.1);
  CHECK(make_instance(raw).offset == -3.1);
}

TEST_CASE("validate_coverable") {
  CHECK(validate_coverable(support::line(1, {{0, 1}}, {0})));
  CHECK_FALSE(validate_coverable(support::line(1, {{0, 3}}, {0})));
  CHECK(validate_coverable(support::line(1, {{0, 1.5}, {2, 3.5}}, {0, 0})));
  CHECK_FALSE(validate_coverable(support::line(1, {{0, 1.5}, {2.5, 5.1}}, {0, 0})));
  // One interval can straddle a gap: [0, 2] covers both.
  CHECK(validate_coverable(support::line(1, {{0, 0.5}, {1, 2}}, {0})));
}

namespace {

// Tries every nondecreasing choice of integer interval centers.
bool packs(const Instance& inst, std::size_t n, int lo, int hi, std::vector<double>& centers) {
  if (centers.size() == n) return support::union_covers(inst, centers, 0);
  const int from = centers.empty() ? lo : static_cast<int>(centers.back());
  for (int c = from; c <= hi; ++c) {
    centers.push_back(c);
    if (packs(inst, n, lo, hi, centers)) return true;
    centers.pop_back();
  }
  return false;
}

}  // namespace

TEST_CASE("validate_coverable agrees with exhaustive packing") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t m = 1 + rng() % 3;
    std::vector<std::pair<double, double>> bars;
    double x = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const double len = 1 + rng() % 4;
      bars.emplace_back(x, x + len);
      x += len + 1 + rng() % 3;
    }
    const double r = 1 + rng() % 2;
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto inst = support::line(r, bars, std::vector<double>(n, 0.0));
      std::vector<double> centers;
      const bool brute = packs(inst, n, 0, static_cast<int>(inst.beta()), centers);
      CHECK(validate_coverable(inst) == brute);
    }
  }
}

TEST_CASE("reach_interval") {
  auto iv = reach_interval({2, 0, 0}, 1);
  REQUIRE(iv);
  CHECK(iv->lo == 1);
  CHECK(iv->hi == 3);
  iv = reach_interval({0, 3, 0}, 3);
  REQUIRE(iv);
  CHECK(iv->lo == 0);
  CHECK(iv->hi == 0);
  iv = reach_interval({0, 3, 0}, 5);
  REQUIRE(iv);
  CHECK(iv->lo == -4);
  CHECK(iv->hi == 4);
  CHECK_FALSE(reach_interval({0, 3, 0}, 2.999).has_value());
}

TEST_CASE("reach_interval is monotone in lambda") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int t = 0; t < 1000; ++t) {
    const Sensor s{u(rng), u(rng), 0};
    double l1 = std::fabs(s.y) + std::fabs(u(rng));
    double l2 = std::fabs(s.y) + std::fabs(u(rng));
    if (l1 > l2) std::swap(l1, l2);
    const auto a = reach_interval(s, l1), b = reach_interval(s, l2);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(b->lo <= a->lo);
    CHECK(a->hi <= b->hi);
  }
}

TEST_CASE("covers_barriers and make_placement") {
  const auto inst = support::make(1, {{0, 2}, {4, 6}}, {{1, 0}, {4, 3}});
  CHECK(covers_barriers(inst.barriers, std::vector<double>{1, 5}, 1));
  CHECK_FALSE(covers_barriers(inst.barriers, std::vector<double>{1, 5.1}, 1));
  CHECK(covers_barriers(inst.barriers, std::vector<double>{1, 5.1}, 1, 0.2));
  const Placement p = make_placement(inst, {1, 5}, 0);
  CHECK(p.covered);
  CHECK(p.max_move == doctest::Approx(std::sqrt(10.0)));
}

TEST_CASE("tolerance defaults and environment override") {
  ToleranceConfig tol;
  CHECK(tol.valid());
  CHECK(tol.eps_cmp == 1e-9);
  setenv("BARRIER_COVER_EPS", "1e-7", 1);
  CHECK(ToleranceConfig::from_env().eps_cmp == 1e-7);
  CHECK(ToleranceConfig::from_env().valid());
  setenv("BARRIER_COVER_EPS", "garbage", 1);
  CHECK(ToleranceConfig::from_env().eps_cmp == 1e-9);
  unsetenv("BARRIER_COVER_EPS");
}
