#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mbc/oracle.hpp"
#include "support.hpp"

using namespace mbc;

TEST_CASE("oracle_decide examples") {
  const auto inst = support::line(1, {{0, 2}, {4, 6}}, {1, 4});
  CHECK(oracle_decide(inst, 1));
  CHECK_FALSE(oracle_decide(inst, 0.99));
  CHECK_FALSE(oracle_decide(support::make(1, {{0, 2}}, {{0, 3}}), 2));
}

TEST_CASE("oracle_decide refuses large instances") {
  const auto inst = support::line(1, {{0, 1}}, std::vector<double>(11, 0.0));
  try {
    oracle_decide(inst, 1);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooLarge);
  }
}

TEST_CASE("oracle_decide needs a non-order-preserving assignment") {
  // The right barrier is only reachable from the left sensor and vice versa.
  const auto inst = support::make(1, {{0, 2}, {10, 12}}, {{1, 0}, {11, 0}});
  CHECK(oracle_decide(inst, 0));
  const auto crossed = support::make(1, {{0, 2}, {10, 12}}, {{11, 0}, {1, 0}});
  CHECK(oracle_decide(crossed, 0));
}

TEST_CASE("oracle_decide is monotone and serial equals parallel") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = support::random_instance(seed, 1 + seed % 8, 1 + seed % 4, seed % 2 == 1);
    bool seen = false;
    for (int t = 0; t <= 60; ++t) {
      const double l = 0.2 * t;
      const bool f = oracle_decide(inst, l);
      CHECK(f == oracle_decide_serial(inst, l));
      CHECK_FALSE((seen && !f));
      seen = seen || f;
    }
  }
}

TEST_CASE("oracle_lambda_line") {
  CHECK(oracle_lambda_line(support::line(1, {{0, 2}, {4, 6}}, {1, 4})) == doctest::Approx(1));
  CHECK(oracle_lambda_line(support::line(1, {{0, 1}}, {0, 0.5})) == 0);
  for (double x : {-3.0, 0.5, 4.0}) {
    // Forced window [b - r, a + r] = [0.5, 1].
    const double want = std::max({0.0, 0.5 - x, x - 1.0});
    CHECK(oracle_lambda_line(support::line(1, {{0, 1.5}}, {x})) == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK_THROWS_AS(oracle_lambda_line(support::make(1, {{0, 1}}, {{0, 1}})), Error);
}

TEST_CASE("oracle_lambda_plane") {
  CHECK(std::fabs(oracle_lambda_plane(support::make(1, {{0, 2}}, {{3, 4}})) - std::sqrt(20.0)) <= 1e-9);
  CHECK_THROWS_AS(oracle_lambda_plane(support::line(1, {{0, 10}}, {0})), Error);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = support::random_instance(seed, 1 + seed % 7, 1 + seed % 4, false);
    CHECK(std::fabs(oracle_lambda_plane(inst) - oracle_lambda_line(inst)) <= 1e-6);
  }
}
