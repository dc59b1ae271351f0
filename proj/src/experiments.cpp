#include "lir/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lir/analytics.hpp"
#include "lir/bloom_filter.hpp"
#include "lir/constellation.hpp"
#include "lir/routing.hpp"

namespace lir::experiments {

SweepResult sweep(Scenario base, std::uint64_t first_seed, std::size_t count) {
  SweepResult r;
  for (std::size_t i = 0; i < count; ++i) {
    base.seed = first_seed + i;
    const Metrics m = run(base);
    for (const auto& f : m.flows) {
      r.total.merge(f);
      r.packets += f.packets;
    }
    r.wrong_hops += m.wrong_hops;
    r.misrouted_bits += m.misrouted_bits;
    r.per_seed_wrong_hops.push_back(static_cast<double>(m.wrong_hops));
  }
  return r;
}

namespace {

FlowSpec unicast(const std::string& name, GridPos src, GridPos dst, double rate_pps, double duration_s) {
  FlowSpec f;
  f.name = name;
  f.src = src;
  f.dsts = {dst};
  f.rate_pps = rate_pps;
  f.duration_s = duration_s;
  return f;
}

}  // namespace

Scenario probe_scenario(std::size_t bf_bits, std::uint64_t seed) {
  Scenario s;
  s.routing = RoutingMode::Source;
  s.bf_bits = bf_bits;
  s.loop_guard = true;
  s.horizon_s = 1.0;
  s.seed = seed;
  // (0,0) -> (0,1) -> (0,2) -> (1,2) -> (2,2)
  s.flows.push_back(unicast("probe", {0, 0}, {2, 2}, 1.0, 1.0));
  return s;
}

namespace {

double closed_form(double p) {
  return 3.0 * p < 1.0 ? static_cast<double>(2 * kProbeHops + 1) * expected_wrong_hops(p)
                       : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

WrongHopPoint wrong_hop_point(std::size_t bf_bits, std::size_t seeds, std::uint64_t first_seed) {
  WrongHopPoint pt;
  pt.bits = bf_bits;
  pt.runs = seeds;
  const Scenario base = probe_scenario(bf_bits);
  pt.p = fpr(bf_bits, kProbeHops, base.hashes);
  pt.theory = closed_form(pt.p);

  // Rebuild each run's filter to count how often a link off the route tests positive.
  const auto c = Constellation::build(base.orbits, base.sats_per_orbit, base.altitude_km, base.seam,
                                      base.inclination_deg);
  const FlowSpec& f = base.flows.front();
  const auto route = *compute_route(c, c.sat(f.src.orbit, f.src.slot), c.sat(f.dsts[0].orbit, f.dsts[0].slot));
  std::uint64_t positives = 0, queries = 0;
  double cond_sum = 0.0;
  for (std::size_t i = 0; i < seeds; ++i) {
    BloomFilter bf(bf_bits, base.hashes, Rng(first_seed + i, Stream::Hash).next());
    for (LinkId l : route) bf.insert(l);
    const double q = std::pow(static_cast<double>(bf.popcount()) / static_cast<double>(bf_bits), base.hashes);
    cond_sum += closed_form(q);
    for (std::uint32_t id = 1; id <= c.link_count(); ++id) {
      if (std::find(route.begin(), route.end(), LinkId{id}) != route.end()) continue;
      ++queries;
      positives += bf.query(LinkId{id});
    }
  }
  pt.measured_p = static_cast<double>(positives) / static_cast<double>(queries);
  pt.measured_theory = closed_form(pt.measured_p);
  pt.conditional_theory = cond_sum / static_cast<double>(seeds);

  const auto r = sweep(base, first_seed, seeds);
  double sum = 0.0, sq = 0.0;
  for (double w : r.per_seed_wrong_hops) {
    sum += w;
    sq += w * w;
  }
  const double n = static_cast<double>(seeds);
  pt.simulated = sum / n;
  const double var = seeds > 1 ? (sq - sum * sum / n) / (n - 1.0) : 0.0;
  pt.std_error = std::sqrt(std::max(var, 0.0) / n);
  return pt;
}

Scenario multiflow_scenario(std::size_t bf_bits, RoutingMode mode, std::uint64_t seed) {
  Scenario s;
  s.routing = mode;
  s.bf_bits = bf_bits;
  s.horizon_s = 2.0;
  s.seed = seed;
  // Two intra-orbit and two inter-orbit pairs crossing in a grid, both directions.
  const double rate = 1250.0, dur = 1.0;
  s.flows.push_back(unicast("a_fwd", {1, 2}, {1, 7}, rate, dur));
  s.flows.push_back(unicast("a_rev", {1, 7}, {1, 2}, rate, dur));
  s.flows.push_back(unicast("b_fwd", {3, 2}, {3, 7}, rate, dur));
  s.flows.push_back(unicast("b_rev", {3, 7}, {3, 2}, rate, dur));
  s.flows.push_back(unicast("c_fwd", {0, 4}, {4, 4}, rate, dur));
  s.flows.push_back(unicast("c_rev", {4, 4}, {0, 4}, rate, dur));
  s.flows.push_back(unicast("d_fwd", {0, 5}, {4, 5}, rate, dur));
  s.flows.push_back(unicast("d_rev", {4, 5}, {0, 5}, rate, dur));
  return s;
}

Scenario failure_scenario(FailureManagement scheme, double rate, std::uint64_t seed) {
  Scenario s;
  s.routing = scheme == FailureManagement::OspfLsa ? RoutingMode::OspfLsa : RoutingMode::Source;
  s.management = scheme;
  s.failure_rate = rate;
  s.mttr_s = 2.0;
  s.hello_interval_s = 1.0;
  s.horizon_s = 21.0;
  s.seed = seed;
  s.flows.push_back(unicast("pair", {0, 0}, {3, 5}, 100.0, 20.0));
  return s;
}

const char* to_string(DeliveryMode m) {
  switch (m) {
    case DeliveryMode::MulticastPnb: return "multicast-pnb";
    case DeliveryMode::MulticastSpf: return "multicast-spf";
    case DeliveryMode::UnicastOptimal: return "unicast-optimal";
    case DeliveryMode::UnicastSource: return "unicast-source";
  }
  return "?";
}

Scenario multicast_scenario(DeliveryMode mode, std::size_t n_dests, std::uint64_t seed) {
  if (n_dests < 1 || n_dests > 6) throw std::invalid_argument("multicast_scenario: N must be in 1..6");
  static const GridPos cluster[] = {{2, 4}, {1, 4}, {2, 3}, {1, 3}, {3, 3}, {1, 2}};
  static const GridPos sources[] = {{4, 10}, {4, 0}};
  Scenario s;
  s.routing = mode == DeliveryMode::UnicastOptimal ? RoutingMode::Optimal : RoutingMode::Source;
  s.queue_capacity = 100;
  s.horizon_s = 3.0;
  s.seed = seed;
  const double rate_pps = 1.6e6 / s.payload_bits;
  const double dur = 2.0;
  std::vector<GridPos> dests(cluster, cluster + n_dests);
  for (std::size_t g = 0; g < std::size(sources); ++g) {
    const std::string name = "src" + std::to_string(g);
    if (mode == DeliveryMode::MulticastPnb || mode == DeliveryMode::MulticastSpf) {
      FlowSpec f;
      f.name = name;
      f.kind = mode == DeliveryMode::MulticastPnb ? FlowKind::MulticastPnb : FlowKind::MulticastSpf;
      f.src = sources[g];
      f.dsts = dests;
      f.rate_pps = rate_pps;
      f.duration_s = dur;
      s.flows.push_back(f);
    } else {
      for (std::size_t i = 0; i < dests.size(); ++i) {
        s.flows.push_back(unicast(name + "_d" + std::to_string(i), sources[g], dests[i], rate_pps, dur));
      }
    }
  }
  return s;
}

std::vector<std::string> preset_names() {
  return {"fig4", "fig8", "fig9", "fig10", "fig11", "fig12", "fig13", "appendix"};
}

Scenario preset(const std::string& name) {
  if (name == "fig4" || name == "fig8") return probe_scenario(32);
  if (name == "fig9") {
    Scenario s = failure_scenario(FailureManagement::Odr, 0.0);
    s.flows = {unicast("pair", {0, 0}, {3, 2}, 100.0, 1.0)};
    s.link_down = {{{1, 0}, {2, 0}, 0.0}, {{1, 2}, {2, 2}, 0.0}};
    s.horizon_s = 2.0;
    return s;
  }
  if (name == "fig10") return multiflow_scenario(30, RoutingMode::Optimal);
  if (name == "fig11") return failure_scenario(FailureManagement::Odd, 0.1);
  if (name == "fig12") {
    Scenario s;
    FlowSpec f;
    f.name = "tree";
    f.kind = FlowKind::MulticastPnb;
    f.src = {0, 0};
    f.dsts = {{1, 2}, {1, 3}};
    f.rate_pps = 100.0;
    f.duration_s = 1.0;
    s.flows.push_back(f);
    s.horizon_s = 2.0;
    return s;
  }
  if (name == "fig13") return multicast_scenario(DeliveryMode::MulticastPnb, 4);
  if (name == "appendix") {
    Scenario s;
    FlowSpec f;
    f.name = "tree";
    f.kind = FlowKind::MulticastSpf;
    f.src = {0, 0};
    f.dsts = {{1, 1}, {2, 1}, {2, 0}};
    f.rate_pps = 10.0;
    f.duration_s = 1.0;
    s.flows.push_back(f);
    s.horizon_s = 2.0;
    return s;
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace lir::experiments
