#include "lir/forwarding.hpp"

#include <algorithm>
#include <stdexcept>

#include "lir/analytics.hpp"
#include "lir/linkstate.hpp"

namespace lir {

const char* to_string(DropReason r) {
  switch (r) {
    case DropReason::Ttl: return "ttl";
    case DropReason::DeadEnd: return "dead-end";
    case DropReason::LinkDown: return "link-down";
    case DropReason::NoRoute: return "no-route";
    case DropReason::QueueFull: return "queue-full";
    case DropReason::Loop: return "loop";
    case DropReason::InFlight: return "in-flight";
  }
  return "?";
}

bool Packet::is_dest(SatId s) const { return std::find(dests.begin(), dests.end(), s) != dests.end(); }

bool Packet::intends(LinkId id) const { return std::binary_search(intended.begin(), intended.end(), id); }

void Packet::set_intended(std::vector<LinkId> links) {
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  intended = std::move(links);
}

std::size_t header_bits(const Packet& p) {
  std::size_t bits = kFixedHeaderBits;
  if (p.multicast) bits += 8 + 16 * p.dests.size();
  switch (p.kind) {
    case HeaderKind::LiR:
      bits += kBfLengthBits + p.normal_bf.bits();
      if (p.eq_bf) bits += kBfLengthBits + p.eq_bf->bits();
      break;
    case HeaderKind::ELR:
      bits += 8 + (p.elr_list.size() - p.elr_cursor) * p.elr_id_bits;
      break;
    case HeaderKind::Plain:
      break;
  }
  return bits;
}

double packet_bits(const Packet& p) { return static_cast<double>(header_bits(p)) + p.payload_bits; }

namespace {

void put(std::vector<bool>& out, std::uint64_t v, unsigned width) {
  for (unsigned i = width; i-- > 0;) out.push_back(((v >> i) & 1U) != 0);
}

}  // namespace

std::vector<bool> serialize_header(const Packet& p) {
  std::vector<bool> out;
  out.reserve(header_bits(p));
  // fixed: dest 16, next encoder 16, ttl 8, flags 8, flow 16, seq 32
  put(out, p.dests.empty() ? 0 : p.dest().value, 16);
  put(out, p.next_encoder ? p.next_encoder->value : kNoEncoder, 16);
  put(out, p.ttl, 8);
  const unsigned flags = static_cast<unsigned>(p.kind) << 6 | (p.multicast ? 1U : 0U) << 5 |
                         (p.is_misrouted ? 1U : 0U) << 4 | (p.eq_bf ? 1U : 0U) << 3;
  put(out, flags, 8);
  put(out, p.flow_id, 16);
  put(out, p.seq, 32);
  if (p.multicast) {
    put(out, p.dests.size(), 8);
    for (SatId d : p.dests) put(out, d.value, 16);
  }
  switch (p.kind) {
    case HeaderKind::LiR:
      put(out, p.normal_bf.bits(), kBfLengthBits);
      p.normal_bf.append_bits(out);
      if (p.eq_bf) {
        put(out, p.eq_bf->bits(), kBfLengthBits);
        p.eq_bf->append_bits(out);
      }
      break;
    case HeaderKind::ELR:
      put(out, p.elr_list.size() - p.elr_cursor, 8);
      for (std::size_t i = p.elr_cursor; i < p.elr_list.size(); ++i) put(out, p.elr_list[i].value, p.elr_id_bits);
      break;
    case HeaderKind::Plain:
      break;
  }
  return out;
}

std::string header_hex(const Packet& p) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const auto bits = serialize_header(p);
  std::string hex;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    unsigned nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble <<= 1;
      if (i + j < bits.size() && bits[i + j]) nibble |= 1;
    }
    hex.push_back(kDigits[nibble]);
  }
  return hex;
}

BloomFilter encode_path(std::span<const LinkId> path, std::size_t m, unsigned k, std::uint64_t seed) {
  BloomFilter bf(m, k, seed);
  for (LinkId id : path) bf.insert(id);
  return bf;
}

ForwardDecision forward_decision(const Constellation& c, SatId sat, std::optional<LinkId> incoming,
                                 const Packet& pkt, const EquivalentPathTable* eq_table) {
  ForwardDecision d;
  if (pkt.is_dest(sat)) {
    d.deliver = true;
    if (!pkt.multicast) return d;
  }
  if (pkt.ttl == 0) {
    if (!d.deliver) d.drop = DropReason::Ttl;
    return d;
  }
  if (!pkt.multicast && pkt.next_encoder == sat) {
    d.reencode = true;
    return d;
  }
  if (pkt.eq_bf && eq_table != nullptr) {
    const auto hits = eq_table->matches(*pkt.eq_bf);
    if (!hits.empty()) {
      d.via_equivalent_path = true;
      d.forward.push_back(hits.front().second);
      return d;
    }
    d.clear_eq_bf = true;
  } else if (pkt.eq_bf) {
    d.clear_eq_bf = true;
  }
  const std::optional<LinkId> skip = incoming ? std::optional<LinkId>(c.reverse(*incoming)) : std::nullopt;
  for (LinkId out : c.out_links(sat)) {
    if (skip && out == *skip) continue;
    if (pkt.normal_bf.query(out)) d.forward.push_back(out);
  }
  if (d.forward.empty() && !d.deliver) d.drop = DropReason::DeadEnd;
  return d;
}

std::optional<DropReason> re_encode_segment(Packet& pkt, const Constellation& c, SatId sat,
                                            std::span<const LinkId> route, std::size_t segment_length,
                                            std::size_t bits, unsigned k, std::uint64_t hash_seed,
                                            SimTime tau) {
  if (route.empty()) return DropReason::NoRoute;
  if (segment_length == 0 || segment_length > route.size()) {
    throw std::invalid_argument("re_encode_segment: segment length out of range");
  }
  if (c.link(route.front()).src != sat) throw std::invalid_argument("re_encode_segment: route does not start here");
  const auto seg = route.first(segment_length);
  pkt.kind = HeaderKind::LiR;
  pkt.normal_bf = encode_path(seg, bits, k, hash_seed);
  pkt.next_encoder = c.link(seg.back()).dst;
  pkt.set_intended(std::vector<LinkId>(seg.begin(), seg.end()));
  pkt.delay.encoding += tau;
  ++pkt.reencodes;
  return std::nullopt;
}

std::optional<DropReason> re_encode(Packet& pkt, const Constellation& c, SatId sat,
                                    const std::optional<std::vector<LinkId>>& route,
                                    const EncodingPlanner& planner, unsigned k, std::uint64_t hash_seed,
                                    SimTime tau) {
  if (!route || route->empty()) return DropReason::NoRoute;
  const std::size_t len = planner.first_segment(route->size());
  return re_encode_segment(pkt, c, sat, *route, len, planner.bits_for(len), k, hash_seed, tau);
}

ForwardDecision elr_forward(const Constellation& c, SatId sat, Packet& pkt, const LinkStateTable* truth) {
  ForwardDecision d;
  if (pkt.is_dest(sat)) {
    d.deliver = true;
    return d;
  }
  if (pkt.ttl == 0) {
    d.drop = DropReason::Ttl;
    return d;
  }
  if (pkt.elr_cursor >= pkt.elr_list.size() || c.link(pkt.elr_list[pkt.elr_cursor]).src != sat) {
    d.drop = DropReason::DeadEnd;
    return d;
  }
  const LinkId next = pkt.elr_list[pkt.elr_cursor];
  if (truth != nullptr && !truth->is_up(next)) {
    d.drop = DropReason::LinkDown;
    return d;
  }
  ++pkt.elr_cursor;
  d.forward.push_back(next);
  return d;
}

void elr_encode(Packet& pkt, std::span<const LinkId> route, std::size_t total_links) {
  pkt.kind = HeaderKind::ELR;
  pkt.elr_list.assign(route.begin(), route.end());
  pkt.elr_cursor = 0;
  pkt.elr_id_bits = ceil_log2(total_links);
  pkt.next_encoder.reset();
  pkt.set_intended(pkt.elr_list);
}

}  // namespace lir
