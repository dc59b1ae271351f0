#include "lir/linkstate.hpp"

#include <algorithm>
#include <stdexcept>

namespace lir {

const char* to_string(FailureManagement m) {
  switch (m) {
    case FailureManagement::None: return "none";
    case FailureManagement::Lsa: return "lsa";
    case FailureManagement::Odr: return "odr";
    case FailureManagement::Odd: return "odd";
    case FailureManagement::OspfLsa: return "ospf-lsa";
  }
  return "?";
}

std::optional<FailureManagement> parse_failure_management(const std::string& s) {
  for (auto m : {FailureManagement::None, FailureManagement::Lsa, FailureManagement::Odr, FailureManagement::Odd,
                 FailureManagement::OspfLsa}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

bool LinkStateView::set(LinkId id, bool up) {
  auto& slot = believed_.at(id.value - 1);
  if ((slot != 0) == up) return false;
  slot = up ? 1 : 0;
  ++version_;
  return true;
}

LinkFilter view_filter(const Constellation& c, SatId sat, const LinkStateTable& truth, const LinkStateView* view,
                       std::optional<LinkId> exclude) {
  return [&c, sat, &truth, view, exclude](LinkId id) {
    if (exclude && id == *exclude) return false;
    const Link& l = c.link(id);
    if (l.src == sat || l.dst == sat) return truth.is_up(id);
    return view == nullptr || view->believed_up(id);
  };
}

LsaAgent::LsaAgent(const Constellation& c, SatId self)
    : c_(&c),
      self_(self),
      view_(c.link_count()),
      advertised_(c.out_links(self).size(), 1),
      seen_seq_(c.satellite_count(), 0),
      accepted_(c.satellite_count(), 0) {}

void LsaAgent::sync(const LinkStateTable& truth) {
  for (const Link& l : c_->links()) view_.set(l.id, truth.is_up(l.id));
  const auto outs = c_->out_links(self_);
  for (std::size_t i = 0; i < outs.size(); ++i) advertised_[i] = truth.is_up(outs[i]) ? 1 : 0;
}

std::optional<LsaMessage> LsaAgent::lsa_tick(const LinkStateTable& truth) {
  const auto outs = c_->out_links(self_);
  bool changed = false;
  for (std::size_t i = 0; i < outs.size(); ++i) {
    const std::uint8_t up = truth.is_up(outs[i]) ? 1 : 0;
    if (up != advertised_[i]) {
      advertised_[i] = up;
      changed = true;
    }
  }
  if (!changed) return std::nullopt;
  LsaMessage msg{self_, next_seq_++, {}};
  for (std::size_t i = 0; i < outs.size(); ++i) msg.states.emplace_back(outs[i], advertised_[i] != 0);
  on_receive(msg);
  return msg;
}

bool LsaAgent::on_receive(const LsaMessage& msg) {
  auto& seen = seen_seq_.at(msg.origin.value);
  if (msg.seq <= seen) return false;
  seen = msg.seq;
  ++accepted_[msg.origin.value];
  for (const auto& [id, up] : msg.states) {
    view_.set(id, up);
    view_.set(c_->reverse(id), up);
  }
  return true;
}

std::optional<std::array<LinkId, 3>> equivalent_path(const Constellation& c, LinkId failed, bool clockwise) {
  const Link& l = c.link(failed);
  const LinkDirection turn = clockwise ? rotate_clockwise(l.direction) : opposite(rotate_clockwise(l.direction));
  const auto a = c.link_in_direction(l.src, turn);
  if (!a) return std::nullopt;
  const auto b = c.link_in_direction(c.link(*a).dst, l.direction);
  if (!b) return std::nullopt;
  const auto back = c.link_in_direction(c.link(*b).dst, opposite(turn));
  if (!back || c.link(*back).dst != l.dst) return std::nullopt;
  return std::array<LinkId, 3>{*a, *b, *back};
}

void EquivalentPathTable::add(LinkId key, LinkId out) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const auto& e, LinkId k) { return e.first < k; });
  if (it != entries_.end() && it->first == key) {
    it->second = out;
  } else {
    entries_.insert(it, {key, out});
  }
}

std::optional<LinkId> EquivalentPathTable::lookup(LinkId key) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const auto& e, LinkId k) { return e.first < k; });
  if (it == entries_.end() || it->first != key) return std::nullopt;
  return it->second;
}

std::vector<std::pair<LinkId, LinkId>> EquivalentPathTable::matches(const BloomFilter& eq_bf) const {
  std::vector<std::pair<LinkId, LinkId>> hits;
  for (const auto& e : entries_) {
    if (eq_bf.query(e.first)) hits.push_back(e);
  }
  return hits;
}

std::vector<EquivalentPathTable> odd_build_tables(const Constellation& c, bool counterclockwise) {
  std::vector<EquivalentPathTable> tables(c.satellite_count());
  for (const Link& l : c.links()) {
    for (bool cw : {true, false}) {
      if (!cw && !counterclockwise) continue;
      const auto path = equivalent_path(c, l.id, cw);
      if (!path) continue;
      const LinkId key = cw ? l.id : counterclockwise_key(l.id);
      for (LinkId hop : *path) tables[c.link(hop).src.value].add(key, hop);
    }
  }
  return tables;
}

RerouteResult odr_handle(const FailureContext& ctx, SatId sat, Packet& pkt, LinkId failed, bool segmented) {
  if (ctx.c == nullptr || ctx.truth == nullptr || ctx.planner == nullptr) {
    throw std::invalid_argument("odr_handle: incomplete context");
  }
  const auto route = compute_route(*ctx.c, sat, pkt.dest(), view_filter(*ctx.c, sat, *ctx.truth, ctx.view, failed));
  if (!route || route->empty()) return {std::nullopt, DropReason::NoRoute};
  std::optional<DropReason> drop;
  if (segmented) {
    drop = re_encode(pkt, *ctx.c, sat, route, *ctx.planner, ctx.k, ctx.hash_seed, ctx.tau);
  } else {
    drop = re_encode_segment(pkt, *ctx.c, sat, *route, route->size(), ctx.planner->bits_for(route->size()), ctx.k,
                             ctx.hash_seed, ctx.tau);
  }
  if (drop) return {std::nullopt, drop};
  return {route->front(), std::nullopt};
}

RerouteResult odd_handle(const FailureContext& ctx, const std::vector<EquivalentPathTable>& tables, SatId sat,
                         Packet& pkt, LinkId failed, bool fallback, unsigned max_nesting) {
  if (ctx.c == nullptr || ctx.truth == nullptr) throw std::invalid_argument("odd_handle: incomplete context");
  const unsigned depth = pkt.eq_bf ? pkt.eq_depth : 0;
  if (depth > max_nesting) return {std::nullopt, DropReason::LinkDown};
  std::vector<LinkId> keys{failed};
  if (fallback) keys.push_back(counterclockwise_key(failed));
  const auto& table = tables.at(sat.value);
  for (LinkId key : keys) {
    const auto out = table.lookup(key);
    if (!out || !ctx.truth->is_up(*out)) continue;
    if (!pkt.eq_bf) {
      pkt.eq_bf = BloomFilter(kEquivalentPathBits, ctx.k, ctx.hash_seed);
      pkt.eq_depth = 0;
    }
    pkt.eq_bf->insert(key);
    ++pkt.eq_depth;
    ++pkt.detours;
    return {*out, std::nullopt};
  }
  return {std::nullopt, DropReason::LinkDown};
}

}  // namespace lir
