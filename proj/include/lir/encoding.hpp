#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lir/analytics.hpp"

namespace lir {

/// Which of the N+1 nodes of an N-hop route (re)encode the in-packet filter.
///
/// Nodes are numbered 1..N+1; node 1 is the source and node N+1 the
/// destination, and both are always marked.
class EncodingPolicy {
 public:
  /// `x` holds x_1..x_{N+1}. Throws std::invalid_argument unless N >= 1 and
  /// x_1 = x_{N+1} = 1.
  explicit EncodingPolicy(std::vector<std::uint8_t> x);

  /// Only the source encodes.
  static EncodingPolicy source(std::size_t n_hops);
  /// Every node encodes.
  static EncodingPolicy every_node(std::size_t n_hops);

  std::size_t n_hops() const { return x_.size() - 1; }
  /// x_n for 1 <= n <= N+1.
  bool encodes(std::size_t n) const;
  const std::vector<std::uint8_t>& bits() const { return x_; }

  friend bool operator==(const EncodingPolicy&, const EncodingPolicy&) = default;

 private:
  std::vector<std::uint8_t> x_;
};

/// Cost of encoding an n-identifier segment, in bits (f(n)).
using SegmentOverhead = std::function<double(std::size_t)>;

SegmentOverhead overhead_of(const OverheadCurve& curve);

/// Smallest encoding node index greater than n (r_n(x)). Requires 1 <= n <= N.
std::size_t next_encoder(const EncodingPolicy& policy, std::size_t n);

/// Temporal overhead: sum over encoding nodes n <= N of f(r_n - n)/B + tau.
double evaluate(const EncodingPolicy& policy, const OverheadParams& params, const SegmentOverhead& f);

struct DpSolution {
  std::vector<double> H;       // H(0..N), seconds
  std::vector<std::size_t> P;  // P(0..N), last encoding split of each sub-problem
  EncodingPolicy policy;
};

/// O(N^2) recursion H(i) = min_{0<=q<i} H(q) + f(i-q)/B + tau with the
/// smallest q kept on ties. Throws std::invalid_argument for N == 0 and
/// std::domain_error when no policy has finite cost.
DpSolution solve_dp(std::size_t n_hops, const OverheadParams& params, const SegmentOverhead& f);

struct BruteForceResult {
  EncodingPolicy policy;
  double cost = 0.0;
};

/// Exhaustive search over all 2^(N-1) policies. Throws std::invalid_argument
/// when N == 0 or N > 20.
BruteForceResult brute_force(std::size_t n_hops, const OverheadParams& params, const SegmentOverhead& f);

struct Segment {
  std::size_t encoder = 0;  // node index, 1-based
  std::size_t length = 0;   // identifiers encoded
};

/// Encoding nodes and their segment lengths, in route order.
std::vector<Segment> segment_plan(const EncodingPolicy& policy);

/// Per-hop-count segment choices shared by every encoder in a simulation.
///
/// For a residual route of R hops the encoder writes the first segment of the
/// plan for R hops. Source mode always writes the whole remainder.
class EncodingPlanner {
 public:
  enum class Mode { Source, Optimal };

  EncodingPlanner(Mode mode, OverheadCurve curve);

  Mode mode() const { return mode_; }
  const OverheadCurve& curve() const { return curve_; }

  /// Identifiers the encoder at the start of an R-hop residual route encodes.
  std::size_t first_segment(std::size_t residual_hops) const;
  /// BF length for a segment of `length` identifiers.
  std::size_t bits_for(std::size_t length) const { return curve_.bits(length); }

 private:
  Mode mode_;
  OverheadCurve curve_;
  std::vector<std::size_t> first_;  // index = residual hops
};

}  // namespace lir
