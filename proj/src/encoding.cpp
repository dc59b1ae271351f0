#include "lir/encoding.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lir {

EncodingPolicy::EncodingPolicy(std::vector<std::uint8_t> x) : x_(std::move(x)) {
  if (x_.size() < 2) throw std::invalid_argument("EncodingPolicy: need N >= 1 hops");
  for (auto& v : x_) {
    if (v > 1) throw std::invalid_argument("EncodingPolicy: entries must be 0 or 1");
  }
  if (x_.front() != 1 || x_.back() != 1) {
    throw std::invalid_argument("EncodingPolicy: x_1 and x_{N+1} must be 1");
  }
}

EncodingPolicy EncodingPolicy::source(std::size_t n_hops) {
  if (n_hops == 0) throw std::invalid_argument("EncodingPolicy: need N >= 1 hops");
  std::vector<std::uint8_t> x(n_hops + 1, 0);
  x[0] = 1;
  x[n_hops] = 1;
  return EncodingPolicy(std::move(x));
}

EncodingPolicy EncodingPolicy::every_node(std::size_t n_hops) {
  return EncodingPolicy(std::vector<std::uint8_t>(n_hops + 1, 1));
}

bool EncodingPolicy::encodes(std::size_t n) const {
  if (n < 1 || n > x_.size()) throw std::out_of_range("EncodingPolicy: node index out of range");
  return x_[n - 1] != 0;
}

SegmentOverhead overhead_of(const OverheadCurve& curve) {
  return [&curve](std::size_t n) { return curve.overhead(n); };
}

std::size_t next_encoder(const EncodingPolicy& policy, std::size_t n) {
  const std::size_t last = policy.n_hops() + 1;
  if (n < 1 || n >= last) throw std::out_of_range("next_encoder: need 1 <= n <= N");
  for (std::size_t i = n + 1; i <= last; ++i) {
    if (policy.encodes(i)) return i;
  }
  return last;
}

double evaluate(const EncodingPolicy& policy, const OverheadParams& params, const SegmentOverhead& f) {
  double total = 0.0;
  for (std::size_t n = 1; n <= policy.n_hops(); ++n) {
    if (!policy.encodes(n)) continue;
    total += f(next_encoder(policy, n) - n) / params.bandwidth_bps + params.tau_s;
  }
  return total;
}

DpSolution solve_dp(std::size_t n_hops, const OverheadParams& params, const SegmentOverhead& f) {
  if (n_hops == 0) throw std::invalid_argument("solve_dp: N must be >= 1");
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> H(n_hops + 1, inf);
  std::vector<std::size_t> P(n_hops + 1, 0);
  H[0] = 0.0;
  for (std::size_t i = 1; i <= n_hops; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double psi = H[j] + (f(i - j) / params.bandwidth_bps + params.tau_s);
      if (psi < H[i]) {
        H[i] = psi;
        P[i] = j;
      }
    }
  }
  if (!std::isfinite(H[n_hops])) {
    throw std::domain_error("solve_dp: every policy has infinite overhead for N=" +
                            std::to_string(n_hops));
  }
  std::vector<std::uint8_t> x(n_hops + 1, 0);
  x.back() = 1;
  std::size_t n = n_hops;
  do {
    n = P[n];
    x[n] = 1;  // node n+1 in 1-based numbering
  } while (n != 0);
  return DpSolution{std::move(H), std::move(P), EncodingPolicy(std::move(x))};
}

BruteForceResult brute_force(std::size_t n_hops, const OverheadParams& params, const SegmentOverhead& f) {
  if (n_hops == 0) throw std::invalid_argument("brute_force: N must be >= 1");
  if (n_hops > 20) throw std::invalid_argument("brute_force: N > 20 is too large to enumerate");
  const std::size_t interior = n_hops - 1;
  BruteForceResult best{EncodingPolicy::source(n_hops), std::numeric_limits<double>::infinity()};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << interior); ++mask) {
    std::vector<std::uint8_t> x(n_hops + 1, 0);
    x.front() = 1;
    x.back() = 1;
    for (std::size_t b = 0; b < interior; ++b) x[b + 1] = (mask >> b) & 1U;
    EncodingPolicy p(std::move(x));
    const double cost = evaluate(p, params, f);
    if (cost < best.cost) best = {std::move(p), cost};
  }
  return best;
}

std::vector<Segment> segment_plan(const EncodingPolicy& policy) {
  std::vector<Segment> plan;
  for (std::size_t n = 1; n <= policy.n_hops(); ++n) {
    if (policy.encodes(n)) plan.push_back({n, next_encoder(policy, n) - n});
  }
  return plan;
}

EncodingPlanner::EncodingPlanner(Mode mode, OverheadCurve curve)
    : mode_(mode), curve_(std::move(curve)), first_(curve_.max_n() + 1, 0) {
  for (std::size_t r = 1; r <= curve_.max_n(); ++r) {
    if (mode_ == Mode::Source) {
      first_[r] = r;
    } else {
      const auto sol = solve_dp(r, curve_.params(), overhead_of(curve_));
      first_[r] = segment_plan(sol.policy).front().length;
    }
  }
}

std::size_t EncodingPlanner::first_segment(std::size_t residual_hops) const {
  if (residual_hops == 0) return 0;
  if (residual_hops >= first_.size()) {
    throw std::out_of_range("EncodingPlanner: route of " + std::to_string(residual_hops) +
                            " hops exceeds planner table");
  }
  return first_[residual_hops];
}

}  // namespace lir
