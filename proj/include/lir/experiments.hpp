#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lir/scenario.hpp"
#include "lir/sim.hpp"

namespace lir::experiments {

/// Runs `base` once per seed in [first, first + count) and merges every
/// flow into one aggregate, in seed order.
struct SweepResult {
  FlowMetrics total;
  std::uint64_t wrong_hops = 0;
  double misrouted_bits = 0.0;
  std::uint64_t packets = 0;
  std::vector<double> per_seed_wrong_hops;
};
SweepResult sweep(Scenario base, std::uint64_t first_seed, std::size_t count);

// Wrong-hop accounting: one packet over a 4-hop route, source encoding.
// Satellites forward each packet once, so copies circling a cycle of false
// positives stop after one lap instead of multiplying until the TTL.
Scenario probe_scenario(std::size_t bf_bits, std::uint64_t seed = 1);
inline constexpr std::size_t kProbeHops = 4;

struct WrongHopPoint {
  std::size_t bits = 0;
  double p = 0.0;            // fpr(M, N, K)
  double theory = 0.0;       // (2N+1) p / (1 - 3p), NaN when p >= 1/3
  double measured_p = 0.0;   // positives among non-member links, all runs
  double measured_theory = 0.0;  // the closed form at measured_p
  double conditional_theory = 0.0;  // mean over runs of the closed form at each filter's own rate
  double simulated = 0.0;   // mean wrong hops per packet
  double std_error = 0.0;
  std::size_t runs = 0;
};
WrongHopPoint wrong_hop_point(std::size_t bf_bits, std::size_t seeds, std::uint64_t first_seed = 1);

// Four two-way flows sharing links, fixed BF length.
Scenario multiflow_scenario(std::size_t bf_bits, RoutingMode mode, std::uint64_t seed = 1);

// One unicast flow under random ISL failures.
Scenario failure_scenario(FailureManagement scheme, double rate, std::uint64_t seed = 1);

// G sources sending to N covering satellites.
enum class DeliveryMode { MulticastPnb, MulticastSpf, UnicastOptimal, UnicastSource };
const char* to_string(DeliveryMode m);
Scenario multicast_scenario(DeliveryMode mode, std::size_t n_dests, std::uint64_t seed = 1);

/// Named presets shipped as configs/<name>.cfg.
std::vector<std::string> preset_names();
/// Throws std::invalid_argument for an unknown name.
Scenario preset(const std::string& name);

}  // namespace lir::experiments
