#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lir/constellation.hpp"
#include "lir/forwarding.hpp"
#include "lir/rng.hpp"
#include "lir/scenario.hpp"

namespace lir {

/// Per-flow results. Counts are per (packet, destination) pair, so a
/// multicast packet to N satellites counts N times.
struct FlowMetrics {
  std::string name;
  std::uint64_t packets = 0;
  std::uint64_t sent = 0;
  std::uint64_t delivered = 0;
  std::uint64_t duplicates = 0;
  std::array<std::uint64_t, kDropReasonCount> drops{};
  std::vector<SimTime> delays;  // end-to-end, one per delivery, in delivery order
  DelayBreakdown delay_sum;
  std::uint64_t hops_sum = 0;

  std::uint64_t dropped() const;
  double delivery_ratio() const;
  double mean_delay_s() const;
  /// Nearest-rank percentile of the end-to-end delay, seconds.
  double delay_percentile_s(double q) const;
  double mean_component_s(SimTime DelayBreakdown::*component) const;
  double mean_hops() const;
  void merge(const FlowMetrics& o);
};

struct LinkMetrics {
  std::uint64_t packets = 0;
  double bits = 0.0;
  double misrouted_bits = 0.0;
};

struct Metrics {
  std::vector<FlowMetrics> flows;
  std::vector<LinkMetrics> links;  // index = LinkId - 1
  std::uint64_t wrong_hops = 0;    // misrouted copies sent on links off the encoded path
  double misrouted_bits = 0.0;     // bits of those transmissions
  std::uint64_t reencodes = 0;
  std::uint64_t reroutes = 0;
  std::uint64_t detours = 0;
  std::uint64_t lsa_messages = 0;
  std::uint64_t link_transitions = 0;
  std::array<std::uint64_t, kDropReasonCount> copy_drops{};  // every dropped copy
  std::uint64_t events = 0;
  SimTime end_time = 0;

  FlowMetrics total() const;
};

struct RunOptions {
  std::ostream* trace = nullptr;  // one JSON object per line
};

/// Runs `s` to its horizon. Identical scenarios give identical Metrics.
Metrics run(const Scenario& s, const RunOptions& opts = {});

/// Emission times of one flow within [start, start + duration) and the horizon.
std::vector<SimTime> emit_flow(const FlowSpec& f, Rng& rng, SimTime horizon);

struct FailureEvent {
  SimTime time = 0;
  LinkId link;  // lower id of the physical ISL
  bool up = false;
};

struct FailureSchedule {
  std::vector<LinkId> initially_down;
  std::vector<FailureEvent> events;  // time order, ties by link id
};

/// Alternating up/down renewal process per physical ISL: down sojourns
/// Exp(mttr), up sojourns Exp(mttr (1 - rate) / rate), initial state drawn
/// from the stationary distribution. rate == 0 yields nothing.
FailureSchedule failure_process(const Constellation& c, double rate, double mttr_s, SimTime horizon, Rng& rng);

/// CSV writers. Every data row starts with scenario_hash,seed.
void write_flow_csv_header(std::ostream& os);
void write_flow_csv(std::ostream& os, const Scenario& s, const Metrics& m);
void write_link_csv_header(std::ostream& os);
void write_link_csv(std::ostream& os, const Scenario& s, const Metrics& m);
void write_summary_csv_header(std::ostream& os);
void write_summary_csv(std::ostream& os, const Scenario& s, const Metrics& m);

/// Shortest round-trip decimal form used in every CSV.
std::string format_double(double v);

}  // namespace lir
