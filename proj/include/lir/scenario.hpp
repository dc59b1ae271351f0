#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lir/constellation.hpp"
#include "lir/linkstate.hpp"

namespace lir {

enum class RoutingMode : std::uint8_t { Source, Optimal, Elr, OspfLsa };
enum class DeadEndPolicy : std::uint8_t { Drop, Bounce };
enum class FlowKind : std::uint8_t { Unicast, MulticastSpf, MulticastPnb };
enum class TrafficPattern : std::uint8_t { Cbr, Poisson };

const char* to_string(RoutingMode m);
const char* to_string(DeadEndPolicy p);
const char* to_string(FlowKind k);
const char* to_string(TrafficPattern p);

/// Grid coordinate as written in configs: "orbit:slot".
struct GridPos {
  unsigned orbit = 0;
  unsigned slot = 0;
  friend bool operator==(const GridPos&, const GridPos&) = default;
};

struct FlowSpec {
  std::string name;
  FlowKind kind = FlowKind::Unicast;
  GridPos src;
  std::vector<GridPos> dsts;
  double rate_pps = 0.0;
  TrafficPattern pattern = TrafficPattern::Cbr;
  double start_s = 0.0;
  double duration_s = 1.0;
  friend bool operator==(const FlowSpec&, const FlowSpec&) = default;
};

/// Physical ISL between two adjacent satellites forced down from `at_s` on.
struct ScheduledFailure {
  GridPos a;
  GridPos b;
  double at_s = 0.0;
  friend bool operator==(const ScheduledFailure&, const ScheduledFailure&) = default;
};

struct Scenario {
  // [constellation]
  unsigned orbits = 6;
  unsigned sats_per_orbit = 11;
  double altitude_km = 780.0;
  double inclination_deg = 86.4;
  bool seam = false;
  // [routing]
  RoutingMode routing = RoutingMode::Source;
  std::size_t bf_bits = 0;  // 0: optimal length per segment
  unsigned hashes = 5;
  unsigned ttl = 64;
  DeadEndPolicy dead_end = DeadEndPolicy::Drop;
  bool loop_guard = false;  // a satellite forwards each packet at most once
  // [failures]
  FailureManagement management = FailureManagement::None;
  double failure_rate = 0.0;  // stationary down fraction per ISL
  double mttr_s = 2.0;
  double hello_interval_s = 1.0;
  bool odd_fallback = false;
  unsigned odd_max_nesting = 0;
  bool odr_segmented = false;
  std::vector<ScheduledFailure> link_down;
  // [link]
  double bandwidth_bps = 10e6;
  std::size_t queue_capacity = 1000;
  double tau_s = 10e-6;
  double payload_bits = 8192.0;
  bool orbital_motion = false;
  // [sim]
  double horizon_s = 1.0;
  std::uint64_t seed = 1;

  std::vector<FlowSpec> flows;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parse or validation failure; line is 0 for whole-scenario problems.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& msg);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Line-oriented "[section]" / "key = value" text; '#' starts a comment.
/// Throws ConfigError naming the offending line.
Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_string(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Canonical text form; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& s);

/// Cross-field checks. Throws ConfigError.
void validate(const Scenario& s);

/// FNV-1a over the canonical text with the seed zeroed.
std::uint64_t scenario_hash(const Scenario& s);
std::string scenario_hash_hex(const Scenario& s);

}  // namespace lir
