#include "lir/sim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <map>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "lir/analytics.hpp"
#include "lir/encoding.hpp"
#include "lir/linkstate.hpp"
#include "lir/multicast.hpp"
#include "lir/routing.hpp"

namespace lir {

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

// ---- metrics ---------------------------------------------------------------

std::uint64_t FlowMetrics::dropped() const {
  std::uint64_t n = 0;
  for (auto d : drops) n += d;
  return n;
}

double FlowMetrics::delivery_ratio() const {
  return sent == 0 ? 0.0 : static_cast<double>(delivered) / static_cast<double>(sent);
}

double FlowMetrics::mean_delay_s() const {
  return delivered == 0 ? 0.0 : time_to_seconds(delay_sum.total()) / static_cast<double>(delivered);
}

double FlowMetrics::delay_percentile_s(double q) const {
  if (delays.empty()) return 0.0;
  std::vector<SimTime> sorted = delays;
  std::sort(sorted.begin(), sorted.end());
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return time_to_seconds(sorted[rank - 1]);
}

double FlowMetrics::mean_component_s(SimTime DelayBreakdown::*component) const {
  return delivered == 0 ? 0.0 : time_to_seconds(delay_sum.*component) / static_cast<double>(delivered);
}

double FlowMetrics::mean_hops() const {
  return delivered == 0 ? 0.0 : static_cast<double>(hops_sum) / static_cast<double>(delivered);
}

void FlowMetrics::merge(const FlowMetrics& o) {
  packets += o.packets;
  sent += o.sent;
  delivered += o.delivered;
  duplicates += o.duplicates;
  for (std::size_t i = 0; i < drops.size(); ++i) drops[i] += o.drops[i];
  delays.insert(delays.end(), o.delays.begin(), o.delays.end());
  delay_sum.queuing += o.delay_sum.queuing;
  delay_sum.transmission += o.delay_sum.transmission;
  delay_sum.propagation += o.delay_sum.propagation;
  delay_sum.encoding += o.delay_sum.encoding;
  hops_sum += o.hops_sum;
}

FlowMetrics Metrics::total() const {
  FlowMetrics t;
  t.name = "*";
  for (const auto& f : flows) t.merge(f);
  return t;
}

// ---- traffic and failures --------------------------------------------------

std::vector<SimTime> emit_flow(const FlowSpec& f, Rng& rng, SimTime horizon) {
  std::vector<SimTime> times;
  if (!(f.rate_pps > 0) || !(f.duration_s > 0)) return times;
  const SimTime start = seconds_to_time(f.start_s);
  const SimTime end = std::min(horizon, seconds_to_time(f.start_s + f.duration_s));
  if (f.pattern == TrafficPattern::Cbr) {
    const auto n = static_cast<std::uint64_t>(std::floor(f.rate_pps * f.duration_s + 1e-9));
    for (std::uint64_t i = 0; i < n; ++i) {
      const SimTime t = start + seconds_to_time(static_cast<double>(i) / f.rate_pps);
      if (t >= end) break;
      times.push_back(t);
    }
  } else {
    double t = f.start_s;
    for (;;) {
      t += rng.exponential(1.0 / f.rate_pps);
      const SimTime at = seconds_to_time(t);
      if (at >= end) break;
      times.push_back(at);
    }
  }
  return times;
}

FailureSchedule failure_process(const Constellation& c, double rate, double mttr_s, SimTime horizon, Rng& rng) {
  FailureSchedule fs;
  if (!(rate > 0)) return fs;
  if (!(rate < 1) || !(mttr_s > 0)) throw std::invalid_argument("failure_process: need 0 <= rate < 1, mttr > 0");
  const double mean_up = mttr_s * (1.0 - rate) / rate;
  for (const Link& l : c.links()) {
    if (c.reverse(l.id) < l.id) continue;
    bool down = rng.bernoulli(rate);
    if (down) fs.initially_down.push_back(l.id);
    double t = 0.0;
    for (;;) {
      t += rng.exponential(down ? mttr_s : mean_up);
      const SimTime at = seconds_to_time(t);
      if (at > horizon) break;
      down = !down;
      fs.events.push_back({at, l.id, !down});
    }
  }
  std::stable_sort(fs.events.begin(), fs.events.end(), [](const FailureEvent& a, const FailureEvent& b) {
    return a.time != b.time ? a.time < b.time : a.link < b.link;
  });
  return fs;
}

// ---- simulator -------------------------------------------------------------

namespace {

enum class EventKind : std::uint8_t { FlowEmit, Enqueue, TransmitDone, Arrive, HelloTick, LinkChange, LsaArrive };

struct Event {
  SimTime time;
  std::uint64_t seq;
  EventKind kind;
  std::uint32_t sat;
  std::uint32_t link;
  std::size_t idx;  // packet slot, flow index, LSA index or link state (0/1)

  bool operator>(const Event& o) const { return time != o.time ? time > o.time : seq > o.seq; }
};

struct Interface {
  std::deque<std::size_t> fifo;
  bool busy = false;
};

struct Tracking {
  std::size_t flow = 0;
  std::vector<SatId> dests;
  std::vector<std::uint8_t> delivered;
  std::optional<DropReason> drop;
  std::vector<bool> forwarded;  // per satellite, with the loop guard only
};

constexpr double kLsaBits = 96 + 8 + 4 * 40;

class Simulator {
 public:
  Simulator(const Scenario& s, const RunOptions& opts)
      : s_(s),
        opts_(opts),
        c_(Constellation::build(s.orbits, s.sats_per_orbit, s.altitude_km, s.seam, s.inclination_deg)),
        truth_(c_),
        params_{s.payload_bits, s.hashes, s.bandwidth_bps, s.tau_s},
        planner_(s.routing == RoutingMode::Optimal ? EncodingPlanner::Mode::Optimal : EncodingPlanner::Mode::Source,
                 s.bf_bits == 0 ? OverheadCurve::optimal(c_.satellite_count(), params_)
                                : OverheadCurve::fixed_bits(c_.satellite_count(), s.bf_bits, params_)),
        horizon_(seconds_to_time(s.horizon_s)),
        tau_(seconds_to_time(s.tau_s)),
        ifaces_(c_.link_count()) {
    validate(s);
    hash_seed_ = Rng(s.seed, Stream::Hash).next();
    m_.links.resize(c_.link_count());
    prop_.resize(c_.link_count());
    for (const Link& l : c_.links()) prop_[l.id.value - 1] = seconds_to_time(c_.propagation_delay(l.id, 0.0));
    if (s.management == FailureManagement::Odd) tables_ = odd_build_tables(c_, s.odd_fallback);
    if (uses_lsa()) {
      for (std::uint32_t i = 0; i < c_.satellite_count(); ++i) agents_.emplace_back(c_, SatId{i});
    }
  }

  Metrics run() {
    schedule_traffic();
    schedule_failures();
    for (auto& a : agents_) a.sync(truth_);
    if (uses_lsa()) {
      const SimTime step = seconds_to_time(s_.hello_interval_s);
      for (SimTime t = step; t <= horizon_; t += step) push(t, EventKind::HelloTick, 0, 0, 0);
    }
    while (!events_.empty() && events_.top().time <= horizon_) {
      const Event e = events_.top();
      events_.pop();
      now_ = e.time;
      ++m_.events;
      dispatch(e);
    }
    m_.end_time = horizon_;
    finalize();
    return std::move(m_);
  }

 private:
  bool uses_lsa() const {
    return s_.management == FailureManagement::Lsa || s_.management == FailureManagement::OspfLsa;
  }

  void push(SimTime t, EventKind k, std::uint32_t sat, std::uint32_t link, std::size_t idx) {
    events_.push(Event{t, next_seq_++, k, sat, link, idx});
  }

  // -- setup

  void schedule_traffic() {
    m_.flows.resize(s_.flows.size());
    for (std::size_t i = 0; i < s_.flows.size(); ++i) {
      m_.flows[i].name = s_.flows[i].name;
      Rng rng(s_.seed, Stream::Traffic, i);
      for (SimTime t : emit_flow(s_.flows[i], rng, horizon_)) push(t, EventKind::FlowEmit, 0, 0, i);
    }
  }

  void schedule_failures() {
    Rng rng(s_.seed, Stream::Failures);
    const auto fs = failure_process(c_, s_.failure_rate, s_.mttr_s, horizon_, rng);
    for (LinkId id : fs.initially_down) truth_.set_link_state(id, false, 0);
    for (const auto& e : fs.events) push(e.time, EventKind::LinkChange, 0, e.link.value, e.up ? 1 : 0);
    for (const auto& f : s_.link_down) {
      const auto id = c_.find_link(c_.sat(f.a.orbit, f.a.slot), c_.sat(f.b.orbit, f.b.slot));
      if (!id) throw ConfigError(0, "link_down: satellites are not adjacent");
      const SimTime at = seconds_to_time(f.at_s);
      if (at == 0) {
        truth_.set_link_state(*id, false, 0);
      } else {
        push(at, EventKind::LinkChange, 0, id->value, 0);
      }
    }
  }

  // -- dispatch

  void dispatch(const Event& e) {
    switch (e.kind) {
      case EventKind::FlowEmit: emit(e.idx); break;
      case EventKind::Enqueue: enqueue_now(LinkId{e.link}, e.idx); break;
      case EventKind::TransmitDone: transmit_done(LinkId{e.link}, e.idx); break;
      case EventKind::Arrive: arrive(SatId{e.sat}, LinkId{e.link}, e.idx); break;
      case EventKind::HelloTick: hello_tick(); break;
      case EventKind::LinkChange:
        if (truth_.set_link_state(LinkId{e.link}, e.idx != 0, now_)) {
          ++m_.link_transitions;
          trace_link(LinkId{e.link}, e.idx != 0);
        }
        break;
      case EventKind::LsaArrive: lsa_arrive(SatId{e.sat}, LinkId{e.link}, e.idx); break;
    }
  }

  // -- packets

  std::size_t alloc(Packet p) {
    if (!free_.empty()) {
      const std::size_t i = free_.back();
      free_.pop_back();
      pool_[i] = std::move(p);
      return i;
    }
    pool_.push_back(std::move(p));
    return pool_.size() - 1;
  }

  void release(std::size_t idx) { free_.push_back(idx); }

  LinkFilter route_filter(SatId sat) const {
    const LinkStateView* view = uses_lsa() ? &agents_[sat.value].view() : nullptr;
    return view_filter(c_, sat, truth_, view);
  }

  std::size_t multicast_bits(std::size_t n) {
    if (s_.bf_bits != 0) return s_.bf_bits;
    auto it = mc_bits_.find(n);
    if (it == mc_bits_.end()) it = mc_bits_.emplace(n, optimal_bf(n, s_.hashes, params_).bits).first;
    return it->second;
  }

  void emit(std::size_t flow) {
    const FlowSpec& f = s_.flows[flow];
    FlowMetrics& fm = m_.flows[flow];
    const SatId src = c_.sat(f.src.orbit, f.src.slot);
    std::vector<SatId> dests;
    for (const auto& d : f.dsts) dests.push_back(c_.sat(d.orbit, d.slot));

    Packet p;
    p.payload_bits = s_.payload_bits;
    p.dests = dests;
    p.ttl = s_.ttl;
    p.flow_id = static_cast<std::uint32_t>(flow);
    p.seq = fm.packets;
    p.created_at = now_;
    p.packet_id = tracking_.size();
    ++fm.packets;
    fm.sent += dests.size();
    tracking_.push_back(Tracking{flow, dests, std::vector<std::uint8_t>(dests.size(), 0), std::nullopt, {}});
    trace_packet("emit", p, src, std::nullopt);

    const LinkFilter usable = route_filter(src);
    SimTime ready = now_;
    if (f.kind != FlowKind::Unicast) {
      std::optional<std::vector<LinkId>> tree;
      if (f.kind == FlowKind::MulticastSpf) {
        tree = spf_tree(c_, src, dests, usable);
      } else {
        tree = pnb_tree(c_, src, dests, choose_primary(c_, src, dests, usable), usable);
      }
      if (!tree) return record_drop_new(p, DropReason::NoRoute);
      Packet mp = make_multicast_packet(*tree, dests, multicast_bits(tree->size()), s_.hashes, hash_seed_, s_.ttl,
                                        s_.payload_bits);
      mp.flow_id = p.flow_id;
      mp.seq = p.seq;
      mp.created_at = p.created_at;
      mp.packet_id = p.packet_id;
      mp.delay.encoding += tau_;
      ++mp.reencodes;
      ++m_.reencodes;
      p = std::move(mp);
      ready += tau_;
    } else {
      const auto route = compute_route(c_, src, p.dest(), usable);
      if (!route) return record_drop_new(p, DropReason::NoRoute);
      switch (s_.routing) {
        case RoutingMode::Source:
        case RoutingMode::Optimal:
          re_encode(p, c_, src, route, planner_, s_.hashes, hash_seed_, tau_);
          ++m_.reencodes;
          ready += tau_;
          break;
        case RoutingMode::Elr:
          elr_encode(p, *route, c_.link_count());
          break;
        case RoutingMode::OspfLsa:
          p.kind = HeaderKind::Plain;
          p.set_intended(*route);
          break;
      }
    }
    process(src, std::nullopt, alloc(std::move(p)), ready);
  }

  void record_drop_new(const Packet& p, DropReason r) {
    ++m_.copy_drops[static_cast<std::size_t>(r)];
    auto& t = tracking_[p.packet_id];
    if (!t.drop) t.drop = r;
    trace_drop(p, r, std::nullopt);
  }

  void drop(std::size_t idx, DropReason r, std::optional<SatId> at) {
    Packet& p = pool_[idx];
    ++m_.copy_drops[static_cast<std::size_t>(r)];
    if (!p.is_misrouted) {
      auto& t = tracking_[p.packet_id];
      if (!t.drop) t.drop = r;
    }
    trace_drop(p, r, at);
    release(idx);
  }

  void deliver(std::size_t idx, SatId sat) {
    const Packet& p = pool_[idx];
    auto& t = tracking_[p.packet_id];
    FlowMetrics& fm = m_.flows[t.flow];
    for (std::size_t i = 0; i < t.dests.size(); ++i) {
      if (t.dests[i] != sat) continue;
      if (t.delivered[i]) {
        ++fm.duplicates;
      } else {
        t.delivered[i] = 1;
        ++fm.delivered;
        const SimTime total = now_ - p.created_at;
        if (total != p.delay.total()) throw std::logic_error("delay components do not sum to the total");
        fm.delays.push_back(total);
        fm.delay_sum.queuing += p.delay.queuing;
        fm.delay_sum.transmission += p.delay.transmission;
        fm.delay_sum.propagation += p.delay.propagation;
        fm.delay_sum.encoding += p.delay.encoding;
        fm.hops_sum += p.hops;
      }
    }
    trace_packet("deliver", p, sat, std::nullopt);
  }

  void arrive(SatId sat, LinkId via, std::size_t idx) {
    Packet& p = pool_[idx];
    if (p.ttl > 0) --p.ttl;
    ++p.hops;
    process(sat, via, idx, now_);
  }

  void process(SatId sat, std::optional<LinkId> incoming, std::size_t idx, SimTime ready) {
    switch (pool_[idx].kind) {
      case HeaderKind::LiR: return process_lir(sat, incoming, idx, ready);
      case HeaderKind::ELR: return process_elr(sat, idx, ready);
      case HeaderKind::Plain: return process_plain(sat, idx, ready);
    }
  }

  void process_lir(SatId sat, std::optional<LinkId> incoming, std::size_t idx, SimTime ready) {
    const EquivalentPathTable* table = tables_.empty() ? nullptr : &tables_[sat.value];
    for (int pass = 0; pass < 2; ++pass) {
      Packet& p = pool_[idx];
      const ForwardDecision d = forward_decision(c_, sat, incoming, p, table);
      if (d.deliver) deliver(idx, sat);
      if (s_.loop_guard && pass == 0 && (d.reencode || !d.forward.empty())) {
        auto& seen = tracking_[p.packet_id].forwarded;
        if (seen.empty()) seen.resize(c_.satellite_count(), false);
        if (seen[sat.value]) return drop(idx, DropReason::Loop, sat);
        seen[sat.value] = true;
      }
      if (d.reencode) {
        const auto route = compute_route(c_, sat, p.dest(), route_filter(sat));
        if (auto r = re_encode(p, c_, sat, route, planner_, s_.hashes, hash_seed_, tau_)) return drop(idx, *r, sat);
        p.eq_bf.reset();
        p.eq_depth = 0;
        ++m_.reencodes;
        ready += tau_;
        trace_packet("reencode", p, sat, std::nullopt);
        continue;
      }
      if (d.clear_eq_bf) {
        p.eq_bf.reset();
        p.eq_depth = 0;
      }
      std::vector<LinkId> out = d.forward;
      if (d.drop) {
        if (*d.drop == DropReason::DeadEnd && s_.dead_end == DeadEndPolicy::Bounce && incoming) {
          out = {c_.reverse(*incoming)};
          p.is_misrouted = true;
        } else {
          return drop(idx, *d.drop, sat);
        }
      }
      if (out.empty()) return release(idx);
      for (std::size_t i = 0; i < out.size(); ++i) {
        const bool last = i + 1 == out.size();
        const std::size_t copy = last ? idx : alloc(pool_[idx]);
        Packet& cp = pool_[copy];
        if (!d.via_equivalent_path && !cp.intends(out[i])) cp.is_misrouted = true;
        send(sat, out[i], copy, ready);
      }
      return;
    }
    throw std::logic_error("re-encoding did not advance the packet");
  }

  void process_elr(SatId sat, std::size_t idx, SimTime ready) {
    const ForwardDecision d = elr_forward(c_, sat, pool_[idx], nullptr);
    if (d.deliver) {
      deliver(idx, sat);
      return release(idx);
    }
    if (d.drop) return drop(idx, *d.drop, sat);
    send(sat, d.forward.front(), idx, ready);
  }

  void process_plain(SatId sat, std::size_t idx, SimTime ready) {
    Packet& p = pool_[idx];
    if (p.is_dest(sat)) {
      deliver(idx, sat);
      return release(idx);
    }
    if (p.ttl == 0) return drop(idx, DropReason::Ttl, sat);
    const auto route = compute_route(c_, sat, p.dest(), route_filter(sat));
    if (!route || route->empty()) return drop(idx, DropReason::NoRoute, sat);
    p.set_intended(*route);
    send(sat, route->front(), idx, ready);
  }

  void send(SatId sat, LinkId link, std::size_t idx, SimTime ready) {
    if (!truth_.is_up(link)) return handle_down(sat, link, idx, ready);
    enqueue(link, idx, ready);
  }

  void handle_down(SatId sat, LinkId link, std::size_t idx, SimTime ready) {
    Packet& p = pool_[idx];
    if (p.is_misrouted || p.multicast || p.kind != HeaderKind::LiR) return drop(idx, DropReason::LinkDown, sat);
    FailureContext ctx{&c_, &truth_, nullptr, &planner_, s_.hashes, hash_seed_, tau_};
    if (s_.management == FailureManagement::Odr) {
      const auto r = odr_handle(ctx, sat, p, link, s_.odr_segmented);
      if (r.drop) return drop(idx, *r.drop, sat);
      p.eq_bf.reset();
      ++m_.reroutes;
      ++m_.reencodes;
      trace_packet("reroute", p, sat, *r.next);
      return enqueue(*r.next, idx, ready + tau_);
    }
    if (s_.management == FailureManagement::Odd) {
      const auto r = odd_handle(ctx, tables_, sat, p, link, s_.odd_fallback, s_.odd_max_nesting);
      if (r.drop) return drop(idx, *r.drop, sat);
      ++m_.detours;
      trace_packet("detour", p, sat, *r.next);
      return enqueue(*r.next, idx, ready);
    }
    drop(idx, DropReason::LinkDown, sat);
  }

  void enqueue(LinkId link, std::size_t idx, SimTime ready) {
    if (ready > now_) return push(ready, EventKind::Enqueue, 0, link.value, idx);
    enqueue_now(link, idx);
  }

  void enqueue_now(LinkId link, std::size_t idx) {
    Interface& q = ifaces_[link.value - 1];
    pool_[idx].last_enqueue_at = now_;
    if (!q.busy) {
      q.fifo.push_back(idx);
      return start_next(link);
    }
    if (q.fifo.size() >= s_.queue_capacity) return drop(idx, DropReason::QueueFull, c_.link(link).src);
    q.fifo.push_back(idx);
  }

  SimTime tx_time(double bits) const { return static_cast<SimTime>(std::llround(bits / s_.bandwidth_bps * 1e9)); }

  SimTime prop_time(LinkId link) const {
    if (!s_.orbital_motion) return prop_[link.value - 1];
    return seconds_to_time(c_.propagation_delay(link, time_to_seconds(now_)));
  }

  void start_next(LinkId link) {
    Interface& q = ifaces_[link.value - 1];
    while (!q.busy && !q.fifo.empty()) {
      const std::size_t idx = q.fifo.front();
      q.fifo.pop_front();
      Packet& p = pool_[idx];
      p.delay.queuing += now_ - p.last_enqueue_at;
      if (!truth_.is_up(link)) {
        handle_down(c_.link(link).src, link, idx, now_);
        continue;
      }
      const double bits = packet_bits(p);
      const SimTime tx = tx_time(bits);
      p.delay.transmission += tx;
      auto& lm = m_.links[link.value - 1];
      ++lm.packets;
      lm.bits += bits;
      if (p.is_misrouted && !p.intends(link)) {
        ++m_.wrong_hops;
        lm.misrouted_bits += bits;
        m_.misrouted_bits += bits;
      }
      trace_packet("tx", p, c_.link(link).src, link);
      q.busy = true;
      push(now_ + tx, EventKind::TransmitDone, 0, link.value, idx);
    }
  }

  void transmit_done(LinkId link, std::size_t idx) {
    Packet& p = pool_[idx];
    const SimTime prop = prop_time(link);
    p.delay.propagation += prop;
    push(now_ + prop, EventKind::Arrive, c_.link(link).dst.value, link.value, idx);
    ifaces_[link.value - 1].busy = false;
    start_next(link);
  }

  // -- link-state advertisements

  void hello_tick() {
    for (std::uint32_t i = 0; i < agents_.size(); ++i) {
      if (auto msg = agents_[i].lsa_tick(truth_)) {
        lsas_.push_back(std::move(*msg));
        flood(SatId{i}, lsas_.size() - 1, std::nullopt);
      }
    }
  }

  void flood(SatId sat, std::size_t msg, std::optional<LinkId> except) {
    for (LinkId out : c_.out_links(sat)) {
      if (except && out == *except) continue;
      if (!truth_.is_up(out)) continue;
      ++m_.lsa_messages;
      push(now_ + tx_time(kLsaBits) + prop_time(out), EventKind::LsaArrive, c_.link(out).dst.value, out.value, msg);
    }
  }

  void lsa_arrive(SatId sat, LinkId via, std::size_t msg) {
    if (agents_[sat.value].on_receive(lsas_[msg])) flood(sat, msg, c_.reverse(via));
  }

  // -- end of run

  void finalize() {
    for (const auto& t : tracking_) {
      FlowMetrics& fm = m_.flows[t.flow];
      for (std::size_t i = 0; i < t.dests.size(); ++i) {
        if (t.delivered[i]) continue;
        ++fm.drops[static_cast<std::size_t>(t.drop.value_or(DropReason::InFlight))];
      }
    }
  }

  // -- tracing

  void trace_packet(const char* ev, const Packet& p, SatId sat, std::optional<LinkId> link) {
    if (opts_.trace == nullptr) return;
    auto& os = *opts_.trace;
    os << "{\"t\":" << now_ << ",\"ev\":\"" << ev << "\",\"pkt\":" << p.packet_id << ",\"flow\":" << p.flow_id
       << ",\"sat\":" << sat.value;
    if (link) os << ",\"link\":" << link->value;
    os << ",\"ttl\":" << p.ttl << ",\"misrouted\":" << (p.is_misrouted ? 1 : 0) << ",\"header_bits\":"
       << header_bits(p);
    if (link) os << ",\"header\":\"" << header_hex(p) << "\"";
    os << "}\n";
  }

  void trace_drop(const Packet& p, DropReason r, std::optional<SatId> at) {
    if (opts_.trace == nullptr) return;
    *opts_.trace << "{\"t\":" << now_ << ",\"ev\":\"drop\",\"pkt\":" << p.packet_id << ",\"flow\":" << p.flow_id
                 << ",\"sat\":" << (at ? static_cast<long long>(at->value) : -1LL) << ",\"reason\":\""
                 << to_string(r) << "\",\"misrouted\":" << (p.is_misrouted ? 1 : 0) << "}\n";
  }

  void trace_link(LinkId id, bool up) {
    if (opts_.trace == nullptr) return;
    *opts_.trace << "{\"t\":" << now_ << ",\"ev\":\"" << (up ? "link_up" : "link_down") << "\",\"link\":"
                 << id.value << "}\n";
  }

  const Scenario& s_;
  const RunOptions& opts_;
  Constellation c_;
  LinkStateTable truth_;
  OverheadParams params_;
  EncodingPlanner planner_;
  SimTime horizon_;
  SimTime tau_;
  std::uint64_t hash_seed_ = 0;

  std::vector<Interface> ifaces_;
  std::vector<SimTime> prop_;
  std::vector<EquivalentPathTable> tables_;
  std::vector<LsaAgent> agents_;
  std::vector<LsaMessage> lsas_;
  std::map<std::size_t, std::size_t> mc_bits_;

  std::vector<Packet> pool_;
  std::vector<std::size_t> free_;
  std::vector<Tracking> tracking_;

  std::priority_queue<Event, std::vector<Event>, std::greater<>> events_;
  std::uint64_t next_seq_ = 0;
  SimTime now_ = 0;
  Metrics m_;
};

}  // namespace

Metrics run(const Scenario& s, const RunOptions& opts) { return Simulator(s, opts).run(); }

// ---- CSV -------------------------------------------------------------------

void write_flow_csv_header(std::ostream& os) {
  os << "scenario_hash,seed,flow,packets,sent,delivered,delivery_ratio,duplicates,mean_delay_s,p50_delay_s,"
        "p95_delay_s,p99_delay_s,mean_queuing_s,mean_transmission_s,mean_propagation_s,mean_encoding_s,"
        "mean_hops,drop_ttl,drop_dead_end,drop_link_down,drop_no_route,drop_queue_full,drop_loop,in_flight\n";
}

void write_flow_csv(std::ostream& os, const Scenario& s, const Metrics& m) {
  const std::string prefix = scenario_hash_hex(s) + "," + std::to_string(s.seed) + ",";
  for (const auto& f : m.flows) {
    os << prefix << f.name << "," << f.packets << "," << f.sent << "," << f.delivered << ","
       << format_double(f.delivery_ratio()) << "," << f.duplicates << "," << format_double(f.mean_delay_s()) << ","
       << format_double(f.delay_percentile_s(0.5)) << "," << format_double(f.delay_percentile_s(0.95)) << ","
       << format_double(f.delay_percentile_s(0.99)) << ","
       << format_double(f.mean_component_s(&DelayBreakdown::queuing)) << ","
       << format_double(f.mean_component_s(&DelayBreakdown::transmission)) << ","
       << format_double(f.mean_component_s(&DelayBreakdown::propagation)) << ","
       << format_double(f.mean_component_s(&DelayBreakdown::encoding)) << "," << format_double(f.mean_hops());
    for (auto d : f.drops) os << "," << d;
    os << "\n";
  }
}

void write_link_csv_header(std::ostream& os) {
  os << "scenario_hash,seed,link_id,packets,bits,misrouted_bits,utilization\n";
}

void write_link_csv(std::ostream& os, const Scenario& s, const Metrics& m) {
  const std::string prefix = scenario_hash_hex(s) + "," + std::to_string(s.seed) + ",";
  const double capacity = s.bandwidth_bps * time_to_seconds(m.end_time);
  for (std::size_t i = 0; i < m.links.size(); ++i) {
    const auto& l = m.links[i];
    os << prefix << i + 1 << "," << l.packets << "," << format_double(l.bits) << ","
       << format_double(l.misrouted_bits) << "," << format_double(capacity > 0 ? l.bits / capacity : 0.0) << "\n";
  }
}

void write_summary_csv_header(std::ostream& os) {
  os << "scenario_hash,seed,sent,delivered,delivery_ratio,mean_delay_s,wrong_hops,misrouted_bits,reencodes,"
        "reroutes,detours,lsa_messages,link_transitions,events\n";
}

void write_summary_csv(std::ostream& os, const Scenario& s, const Metrics& m) {
  const FlowMetrics t = m.total();
  os << scenario_hash_hex(s) << "," << s.seed << "," << t.sent << "," << t.delivered << ","
     << format_double(t.delivery_ratio()) << "," << format_double(t.mean_delay_s()) << "," << m.wrong_hops << ","
     << format_double(m.misrouted_bits) << "," << m.reencodes << "," << m.reroutes << "," << m.detours << ","
     << m.lsa_messages << "," << m.link_transitions << "," << m.events << "\n";
}

}  // namespace lir
