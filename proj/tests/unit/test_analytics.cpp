#include <cmath>

#include <stdexcept>

#include "doctest.h"
#include "lir/analytics.hpp"
#include "lir/bloom_filter.hpp"
#include "oracles.hpp"

using namespace lir;

TEST_CASE("expected wrong hops") {
  CHECK(expected_wrong_hops(0.0) == 0.0);
  CHECK(expected_wrong_hops(0.1) == doctest::Approx(0.1 / 0.7));
  CHECK(expected_wrong_hops(0.2) == doctest::Approx(0.5));
  CHECK_THROWS_AS(expected_wrong_hops(1.0 / 3.0), std::domain_error);
  CHECK_THROWS_AS(expected_wrong_hops(-0.01), std::domain_error);
}

TEST_CASE("overhead terms") {
  const OverheadParams params;
  CHECK(f_cfo(4, 32) == 128.0);
  const double p = fpr(32, 4, 5);
  CHECK(f_ifo(4, 32, 5, params) == doctest::Approx(9.0 * (32 + 8192) * p / (1 - 3 * p)));
  CHECK(f_fo(4, 32, 5, params) == doctest::Approx(f_ifo(4, 32, 5, params) + 128.0));
  CHECK(f_fo(4, 32, 5, params) == doctest::Approx(oracle::overhead_bits(4, 32, 5, 8192)));
  CHECK_FALSE(overhead_finite(12, 10, 5));
  CHECK_THROWS_AS(f_ifo(12, 10, 5, params), std::domain_error);
}

TEST_CASE("incorrect overhead falls and correct overhead rises with m") {
  const OverheadParams params;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t m = 5 * n; m < 400; ++m) {
      if (!overhead_finite(n, m, 5)) continue;
      CHECK(f_ifo(n, m + 1, 5, params) < f_ifo(n, m, 5, params));
      CHECK(f_cfo(n, m + 1) > f_cfo(n, m));
    }
  }
}

TEST_CASE("optimal length matches the exhaustive scan") {
  for (double payload : {576.0, 8192.0, 65536.0}) {
    OverheadParams params;
    params.payload_bits = payload;
    for (unsigned k : {3u, 5u, 7u}) {
      for (std::size_t n = 1; n <= 12; ++n) {
        const auto got = optimal_bf(n, k, params);
        const auto want = oracle::m_scan(n, k, payload);
        CHECK(got.bits == want.bits);
        CHECK(got.overhead == doctest::Approx(want.overhead).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("explicit-link bound") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(264) == 9);
  CHECK(ceil_log2(256) == 8);
  auto e = elr_overhead(1, 2);
  CHECK(e.header_bits == 1);
  CHECK(e.total_bits == 1);
  e = elr_overhead(12, 264);
  CHECK(e.header_bits == 108);
  CHECK(e.total_bits == 1296);
  // 4408 satellites with four ISLs each, both directions
  e = elr_overhead(10, 4ull * 4408 * 4);
  CHECK(e.header_bits == 170);
  CHECK(e.total_bits == 1700);
}

TEST_CASE("minimum bits for a target rate") {
  for (double t : {0.001, 0.01, 0.05}) {
    for (std::size_t n = 1; n <= 12; ++n) {
      const std::size_t m = min_bits_for_fpr(n, 5, t);
      CHECK(fpr(m, n, 5) <= t);
      CHECK(fpr(m - 1, n, 5) > t);
    }
  }
  CHECK(payload_ratio(8192, 0) == 1.0);
  CHECK(payload_ratio(100, 100) == 0.5);
}

TEST_CASE("parameter validation") {
  OverheadParams p;
  CHECK_NOTHROW(p.validate());
  p.tau_s = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = {};
  p.bandwidth_bps = -1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("overhead curves") {
  const OverheadParams params;
  const auto opt = OverheadCurve::optimal(12, params);
  CHECK(opt.max_n() == 12);
  CHECK(opt.overhead(0) == 0.0);
  for (std::size_t n = 1; n <= 12; ++n) {
    CHECK(opt.overhead(n) == optimal_bf(n, 5, params).overhead);
    CHECK(opt.bits(n) == optimal_bf(n, 5, params).bits);
  }
  const auto fixed = OverheadCurve::fixed_bits(12, 20, params);
  for (std::size_t n = 1; n <= 12; ++n) {
    CHECK(fixed.bits(n) == 20);
    if (overhead_finite(n, 20, 5)) {
      CHECK(fixed.overhead(n) == doctest::Approx(f_fo(n, 20, 5, params)));
    } else {
      CHECK(std::isinf(fixed.overhead(n)));
    }
  }
}
