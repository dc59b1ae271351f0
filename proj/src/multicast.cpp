#include "lir/multicast.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace lir {

namespace {

void sort_unique(std::vector<LinkId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool append_route(const Constellation& c, SatId a, SatId b, const LinkFilter& usable, std::vector<LinkId>& out) {
  const auto r = compute_route(c, a, b, usable);
  if (!r) return false;
  out.insert(out.end(), r->begin(), r->end());
  return true;
}

}  // namespace

std::optional<std::vector<LinkId>> spf_tree(const Constellation& c, SatId src, const std::vector<SatId>& dests,
                                            const LinkFilter& usable) {
  if (dests.empty()) throw std::invalid_argument("spf_tree: empty destination set");
  std::vector<LinkId> tree;
  for (SatId d : dests) {
    if (!append_route(c, src, d, usable, tree)) return std::nullopt;
  }
  sort_unique(tree);
  return tree;
}

std::optional<std::vector<LinkId>> pnb_tree(const Constellation& c, SatId src, const std::vector<SatId>& dests,
                                            SatId primary, const LinkFilter& usable) {
  if (std::find(dests.begin(), dests.end(), primary) == dests.end()) {
    throw std::invalid_argument("pnb_tree: primary must be a destination");
  }
  std::vector<LinkId> tree;
  if (!append_route(c, src, primary, usable, tree)) return std::nullopt;
  for (SatId d : dests) {
    if (d != primary && !append_route(c, primary, d, usable, tree)) return std::nullopt;
  }
  sort_unique(tree);
  return tree;
}

SatId choose_primary(const Constellation& c, SatId src, const std::vector<SatId>& dests, const LinkFilter& usable) {
  if (dests.empty()) throw std::invalid_argument("choose_primary: empty destination set");
  const auto from_src = hop_distances(c, src, usable);
  SatId best = dests.front();
  long best_cost = std::numeric_limits<long>::max();
  for (SatId d : dests) {
    if (from_src[d.value] < 0) continue;
    const auto from_d = hop_distances(c, d, usable);
    long cost = from_src[d.value];
    bool reachable = true;
    for (SatId o : dests) {
      if (o == d) continue;
      if (from_d[o.value] < 0) reachable = false;
      cost += from_d[o.value];
    }
    if (!reachable) continue;
    if (cost < best_cost || (cost == best_cost && d < best)) {
      best = d;
      best_cost = cost;
    }
  }
  return best;
}

unsigned WalkReport::duplicates() const {
  unsigned dup = 0;
  for (const auto& [sat, n] : deliveries) dup += n > 1 ? n - 1 : 0;
  return dup;
}

WalkReport link_identified_walk(const Constellation& c, SatId src, const Packet& pkt, std::size_t max_copies) {
  struct Copy {
    SatId at;
    std::optional<LinkId> incoming;
    Packet pkt;
  };
  WalkReport rep;
  std::deque<Copy> queue;
  queue.push_back({src, std::nullopt, pkt});
  while (!queue.empty() && rep.transmissions < max_copies) {
    Copy cp = std::move(queue.front());
    queue.pop_front();
    const auto d = forward_decision(c, cp.at, cp.incoming, cp.pkt);
    if (d.deliver) ++rep.deliveries[cp.at];
    if (d.drop == DropReason::Ttl) ++rep.ttl_drops;
    if (d.drop == DropReason::DeadEnd || d.reencode) ++rep.dead_ends;
    for (LinkId out : d.forward) {
      ++rep.transmissions;
      ++rep.carried[out];
      Copy next{c.link(out).dst, out, cp.pkt};
      if (!cp.pkt.intends(out)) {
        ++rep.misrouted_transmissions;
        rep.misrouted_bits += packet_bits(cp.pkt);
        next.pkt.is_misrouted = true;
      }
      --next.pkt.ttl;
      queue.push_back(std::move(next));
    }
  }
  return rep;
}

WalkReport node_identified_walk(const Constellation& c, SatId src, const std::vector<SatId>& dests,
                                const std::vector<SatId>& encoded_nodes, std::size_t m, unsigned k, unsigned ttl,
                                std::uint64_t seed, std::size_t max_copies) {
  auto node_key = [](SatId s) { return LinkId{s.value + 1}; };
  BloomFilter bf(m, k, seed);
  for (SatId s : encoded_nodes) bf.insert(node_key(s));

  struct Copy {
    SatId at;
    std::optional<SatId> sender;
    unsigned ttl;
  };
  WalkReport rep;
  std::deque<Copy> queue;
  queue.push_back({src, std::nullopt, ttl});
  while (!queue.empty() && rep.transmissions < max_copies) {
    const Copy cp = queue.front();
    queue.pop_front();
    if (std::find(dests.begin(), dests.end(), cp.at) != dests.end()) ++rep.deliveries[cp.at];
    if (cp.ttl == 0) {
      ++rep.ttl_drops;
      continue;
    }
    bool sent = false;
    for (const auto& [id, nb] : c.neighbors_out(cp.at)) {
      if (cp.sender && nb == *cp.sender) continue;
      if (!bf.query(node_key(nb))) continue;
      ++rep.transmissions;
      ++rep.carried[id];
      sent = true;
      queue.push_back({nb, cp.at, cp.ttl - 1});
    }
    if (!sent && std::find(dests.begin(), dests.end(), cp.at) == dests.end()) ++rep.dead_ends;
  }
  return rep;
}

Packet make_multicast_packet(const std::vector<LinkId>& tree, const std::vector<SatId>& dests, std::size_t bits,
                             unsigned k, std::uint64_t hash_seed, unsigned ttl, double payload_bits) {
  if (dests.empty() || dests.size() > kMaxMulticastDests) {
    throw std::invalid_argument("multicast packet needs 1.." + std::to_string(kMaxMulticastDests) + " destinations");
  }
  Packet p;
  p.kind = HeaderKind::LiR;
  p.multicast = true;
  p.dests = dests;
  p.normal_bf = encode_path(tree, bits, k, hash_seed);
  p.set_intended(tree);
  p.ttl = ttl;
  p.payload_bits = payload_bits;
  return p;
}

DemoReport node_identified_demo(const Constellation& c, SatId src, const std::vector<SatId>& dests,
                                const std::vector<LinkId>& tree, unsigned k, unsigned ttl, std::uint64_t seed) {
  constexpr std::size_t kWideFilter = 4096;
  DemoReport rep;
  rep.encoded_links = tree;
  rep.encoded_nodes.push_back(src);
  for (LinkId id : tree) {
    for (SatId s : {c.link(id).src, c.link(id).dst}) {
      if (std::find(rep.encoded_nodes.begin(), rep.encoded_nodes.end(), s) == rep.encoded_nodes.end()) {
        rep.encoded_nodes.push_back(s);
      }
    }
  }
  rep.node_identified = node_identified_walk(c, src, dests, rep.encoded_nodes, kWideFilter, k, ttl, seed);
  const Packet pkt = make_multicast_packet(tree, dests, kWideFilter, k, seed, ttl, 8192.0);
  rep.link_identified = link_identified_walk(c, src, pkt);
  return rep;
}

DemoScenario appendix_scenario(const Constellation& c) {
  if (c.orbits() < 3 || c.sats_per_orbit() < 3) throw std::invalid_argument("appendix_scenario: grid too small");
  auto link = [&c](SatId a, SatId b) {
    const auto id = c.find_link(a, b);
    if (!id) throw std::logic_error("appendix_scenario: missing link");
    return *id;
  };
  const SatId s11 = c.sat(0, 0), s21 = c.sat(1, 0), s22 = c.sat(1, 1), s31 = c.sat(2, 0), s32 = c.sat(2, 1);
  DemoScenario sc;
  sc.src = s11;
  sc.dests = {s22, s32, s31};
  sc.tree = {link(s11, s21), link(s21, s22), link(s21, s31), link(s31, s32)};
  return sc;
}

}  // namespace lir
