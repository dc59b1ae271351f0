#include "lir/analytics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "lir/bloom_filter.hpp"

namespace lir {

void OverheadParams::validate() const {
  if (!(payload_bits > 0)) throw std::invalid_argument("payload_bits must be > 0");
  if (hashes == 0) throw std::invalid_argument("hashes must be > 0");
  if (!(bandwidth_bps > 0)) throw std::invalid_argument("bandwidth_bps must be > 0");
  if (!(tau_s > 0)) throw std::invalid_argument("tau_s must be > 0");
}

double expected_wrong_hops(double p) {
  if (p < 0.0) throw std::domain_error("expected_wrong_hops: negative probability");
  if (3.0 * p >= 1.0) {
    throw std::domain_error("expected_wrong_hops: p >= 1/3, expectation diverges");
  }
  return p / (1.0 - 3.0 * p);
}

bool overhead_finite(std::size_t n, std::size_t m, unsigned k) { return 3.0 * fpr(m, n, k) < 1.0; }

double f_ifo(std::size_t n, std::size_t m, unsigned k, const OverheadParams& params) {
  const double p = fpr(m, n, k);
  return static_cast<double>(2 * n + 1) * (static_cast<double>(m) + params.payload_bits) *
         expected_wrong_hops(p);
}

double f_cfo(std::size_t n, std::size_t m) { return static_cast<double>(m) * static_cast<double>(n); }

double f_fo(std::size_t n, std::size_t m, unsigned k, const OverheadParams& params) {
  return f_ifo(n, m, k, params) + f_cfo(n, m);
}

OptimalBf optimal_bf(std::size_t n, unsigned k, const OverheadParams& params) {
  if (n == 0) throw std::invalid_argument("optimal_bf: n must be >= 1");
  const std::size_t lo = std::max<std::size_t>(k, 1);
  const std::size_t hi = 64 * n * k;
  const std::size_t patience = 3 * static_cast<std::size_t>(k);

  OptimalBf best{0, std::numeric_limits<double>::infinity()};
  double prev = std::numeric_limits<double>::infinity();
  std::size_t rising = 0;
  for (std::size_t m = lo; m <= hi; ++m) {
    if (!overhead_finite(n, m, k)) continue;
    const double f = f_fo(n, m, k, params);
    if (f < best.overhead) best = {m, f};
    rising = (f >= prev) ? rising + 1 : 0;
    prev = f;
    if (rising >= patience) break;
  }
  if (best.bits == 0) {
    throw std::logic_error("optimal_bf: no feasible length for n=" + std::to_string(n));
  }
  return best;
}

unsigned ceil_log2(std::uint64_t l) {
  if (l == 0) throw std::domain_error("ceil_log2: l must be >= 1");
  unsigned b = 0;
  while ((std::uint64_t{1} << b) < l) ++b;
  return b;
}

ElrOverhead elr_overhead(std::size_t n, std::uint64_t l) {
  const std::uint64_t per = ceil_log2(l);
  return ElrOverhead{n * per, static_cast<std::uint64_t>(n) * n * per};
}

std::size_t min_bits_for_fpr(std::size_t n, unsigned k, double target) {
  if (!(target > 0.0)) throw std::domain_error("min_bits_for_fpr: target must be > 0");
  std::size_t m = 1;
  while (fpr(m, n, k) > target) ++m;
  return m;
}

double payload_ratio(double payload_bits, double path_bits) {
  return payload_bits / (payload_bits + path_bits);
}

OverheadCurve OverheadCurve::optimal(std::size_t max_n, const OverheadParams& params) {
  params.validate();
  OverheadCurve c;
  c.params_ = params;
  c.overhead_.assign(max_n + 1, 0.0);
  c.bits_.assign(max_n + 1, 0);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto o = optimal_bf(n, params.hashes, params);
    c.overhead_[n] = o.overhead;
    c.bits_[n] = o.bits;
  }
  return c;
}

OverheadCurve OverheadCurve::fixed_bits(std::size_t max_n, std::size_t bits,
                                        const OverheadParams& params) {
  params.validate();
  if (bits == 0) throw std::invalid_argument("OverheadCurve: bits must be >= 1");
  OverheadCurve c;
  c.params_ = params;
  c.overhead_.assign(max_n + 1, 0.0);
  c.bits_.assign(max_n + 1, bits);
  c.bits_[0] = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    c.overhead_[n] = overhead_finite(n, bits, params.hashes)
                         ? f_fo(n, bits, params.hashes, params)
                         : std::numeric_limits<double>::infinity();
  }
  return c;
}

double OverheadCurve::overhead(std::size_t n) const {
  if (n >= overhead_.size()) {
    throw std::out_of_range("OverheadCurve: n=" + std::to_string(n) + " beyond table");
  }
  return overhead_[n];
}

std::size_t OverheadCurve::bits(std::size_t n) const {
  if (n >= bits_.size()) {
    throw std::out_of_range("OverheadCurve: n=" + std::to_string(n) + " beyond table");
  }
  return bits_[n];
}

}  // namespace lir
