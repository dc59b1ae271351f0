#include <cmath>
#include <random>

#include <stdexcept>

#include "doctest.h"
#include "lir/encoding.hpp"
#include "oracles.hpp"

using namespace lir;

TEST_CASE("policy construction") {
  CHECK_THROWS_AS(EncodingPolicy({1}), std::invalid_argument);
  CHECK_THROWS_AS(EncodingPolicy({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(EncodingPolicy({1, 1, 0}), std::invalid_argument);
  const auto s = EncodingPolicy::source(4);
  CHECK(s.bits() == std::vector<std::uint8_t>{1, 0, 0, 0, 1});
  CHECK(EncodingPolicy::every_node(3).bits() == std::vector<std::uint8_t>{1, 1, 1, 1});
  CHECK(s.n_hops() == 4);
  CHECK(s.encodes(1));
  CHECK_FALSE(s.encodes(2));
}

TEST_CASE("next encoder and segments") {
  const EncodingPolicy x({1, 0, 1, 0, 0, 1});
  CHECK(next_encoder(x, 1) == 3);
  CHECK(next_encoder(x, 2) == 3);
  CHECK(next_encoder(x, 3) == 6);
  CHECK(next_encoder(x, 5) == 6);
  const auto plan = segment_plan(x);
  REQUIRE(plan.size() == 2);
  CHECK(plan[0].encoder == 1);
  CHECK(plan[0].length == 2);
  CHECK(plan[1].encoder == 3);
  CHECK(plan[1].length == 3);
}

TEST_CASE("evaluate sums one term per encoder") {
  OverheadParams params;
  const SegmentOverhead f = [](std::size_t n) { return 100.0 * n * n; };
  const EncodingPolicy x({1, 0, 1, 0, 0, 1});
  CHECK(evaluate(x, params, f) == doctest::Approx(400.0 / params.bandwidth_bps + 900.0 / params.bandwidth_bps +
                                                  2 * params.tau_s));
  CHECK(evaluate(EncodingPolicy::source(5), params, f) ==
        doctest::Approx(2500.0 / params.bandwidth_bps + params.tau_s));
}

TEST_CASE("one-hop route encodes only at the source") {
  const OverheadParams params;
  const auto curve = OverheadCurve::optimal(1, params);
  const auto dp = solve_dp(1, params, overhead_of(curve));
  CHECK(dp.policy.bits() == std::vector<std::uint8_t>{1, 1});
  CHECK_THROWS_AS(solve_dp(0, params, overhead_of(curve)), std::invalid_argument);
}

TEST_CASE("huge processing delay keeps the source policy") {
  OverheadParams params;
  params.tau_s = 1e3;
  const auto curve = OverheadCurve::optimal(12, params);
  for (std::size_t n = 1; n <= 12; ++n) {
    CHECK(solve_dp(n, params, overhead_of(curve)).policy == EncodingPolicy::source(n));
  }
}

TEST_CASE("defaults at nine hops agree with brute force") {
  const OverheadParams params;
  const auto curve = OverheadCurve::optimal(9, params);
  const auto f = overhead_of(curve);
  const auto dp = solve_dp(9, params, f);
  const auto bf = brute_force(9, params, f);
  CHECK(evaluate(dp.policy, params, f) == doctest::Approx(dp.H[9]).epsilon(1e-12));
  CHECK(dp.H[9] == bf.cost);
  CHECK(dp.H[0] == 0.0);
  CHECK_THROWS_AS(brute_force(21, params, f), std::invalid_argument);
}

TEST_CASE("dynamic program against the oracle enumeration on random curves") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen() % 12;
    OverheadParams params;
    params.bandwidth_bps = 1e6 + u(gen) * 1e8;
    params.tau_s = u(gen) * 1e-3 + 1e-9;
    // convex-ish random curve with integer-valued steps to provoke ties
    std::vector<double> f(n + 1, 0.0);
    double step = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      step += static_cast<double>(gen() % 50);
      f[i] = f[i - 1] + step;
    }
    const SegmentOverhead fn = [&](std::size_t i) { return f[i]; };
    const auto dp = solve_dp(n, params, fn);
    double best = INFINITY;
    for (const auto& x : oracle::enumerate_policies(n)) {
      best = std::min(best, oracle::policy_cost(x, f, params.bandwidth_bps, params.tau_s));
    }
    CHECK(dp.H[n] == best);
    CHECK(oracle::policy_cost(dp.policy.bits(), f, params.bandwidth_bps, params.tau_s) == best);
  }
}

TEST_CASE("dynamic program never loses to the source or every-node policy") {
  const OverheadParams params;
  const auto curve = OverheadCurve::optimal(12, params);
  const auto f = overhead_of(curve);
  for (std::size_t n = 1; n <= 12; ++n) {
    const double h = solve_dp(n, params, f).H[n];
    CHECK(h <= evaluate(EncodingPolicy::source(n), params, f));
    CHECK(h <= evaluate(EncodingPolicy::every_node(n), params, f));
  }
}

TEST_CASE("planner segments") {
  const OverheadParams params;
  const auto curve = OverheadCurve::optimal(12, params);
  const EncodingPlanner src(EncodingPlanner::Mode::Source, curve);
  const EncodingPlanner opt(EncodingPlanner::Mode::Optimal, curve);
  for (std::size_t r = 1; r <= 12; ++r) {
    CHECK(src.first_segment(r) == r);
    const auto plan = segment_plan(solve_dp(r, params, overhead_of(curve)).policy);
    CHECK(opt.first_segment(r) == plan.front().length);
    CHECK(opt.first_segment(r) >= 1);
    CHECK(opt.first_segment(r) <= r);
  }
  CHECK(opt.bits_for(4) == curve.bits(4));
}
