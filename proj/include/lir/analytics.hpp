#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lir {

/// Physical constants of the overhead model. Overheads are in bits throughout.
struct OverheadParams {
  double payload_bits = 8192.0;   // effective data per packet (1 KB)
  unsigned hashes = 5;            // K
  double bandwidth_bps = 10e6;    // ISL bandwidth
  double tau_s = 10e-6;           // re-encoding processing delay

  /// Throws std::invalid_argument unless every field is strictly positive.
  void validate() const;
};

/// Expected hops along one wrong direction of the false-positive branching
/// process, p / (1 - 3p). Throws std::domain_error for p < 0 or p >= 1/3.
double expected_wrong_hops(double p);

/// Expected bits carried on wrong links for an n-hop route in an m-bit filter.
/// Throws std::domain_error when fpr(m, n, K) >= 1/3.
double f_ifo(std::size_t n, std::size_t m, unsigned k, const OverheadParams& params);

/// Header bits carried along the intended n-hop route: m * n.
double f_cfo(std::size_t n, std::size_t m);

/// f_ifo + f_cfo.
double f_fo(std::size_t n, std::size_t m, unsigned k, const OverheadParams& params);

/// True when fpr(m, n, k) < 1/3, i.e. f_ifo is finite.
bool overhead_finite(std::size_t n, std::size_t m, unsigned k);

struct OptimalBf {
  std::size_t bits = 0;   // m*
  double overhead = 0.0;  // f(n) = f_fo(n, m*, k)
};

/// Integer m minimizing f_fo(n, m, k) over m in [max(k,1), 64 n k], skipping
/// lengths with fpr >= 1/3. The scan stops early once f_fo has not decreased
/// for 3k consecutive lengths. Ties go to the smallest m.
OptimalBf optimal_bf(std::size_t n, unsigned k, const OverheadParams& params);

struct ElrOverhead {
  std::uint64_t header_bits = 0;  // n * ceil(log2 l)
  std::uint64_t total_bits = 0;   // n^2 * ceil(log2 l)
};

unsigned ceil_log2(std::uint64_t l);

/// Explicit-link-list lower bound for an n-hop route among l links.
ElrOverhead elr_overhead(std::size_t n, std::uint64_t l);

/// Smallest m with fpr(m, n, k) <= target.
std::size_t min_bits_for_fpr(std::size_t n, unsigned k, double target);

/// payload / (payload + path bits).
double payload_ratio(double payload_bits, double path_bits);

/// f(n) and its BF length for n = 1..max_n, either at the optimal length per
/// segment or at one fixed length. Infinite entries mark segments whose false
/// positive rate reaches 1/3.
class OverheadCurve {
 public:
  static OverheadCurve optimal(std::size_t max_n, const OverheadParams& params);
  static OverheadCurve fixed_bits(std::size_t max_n, std::size_t bits, const OverheadParams& params);

  std::size_t max_n() const { return overhead_.size() - 1; }
  /// f(n); f(0) = 0.
  double overhead(std::size_t n) const;
  /// BF length used for an n-identifier segment.
  std::size_t bits(std::size_t n) const;
  const OverheadParams& params() const { return params_; }

 private:
  OverheadParams params_;
  std::vector<double> overhead_;
  std::vector<std::size_t> bits_;
};

}  // namespace lir
