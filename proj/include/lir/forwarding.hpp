#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lir/bloom_filter.hpp"
#include "lir/constellation.hpp"
#include "lir/encoding.hpp"

namespace lir {

class EquivalentPathTable;

enum class HeaderKind : std::uint8_t { LiR, ELR, Plain };

enum class DropReason : std::uint8_t {
  Ttl,
  DeadEnd,
  LinkDown,
  NoRoute,
  QueueFull,
  Loop,      // copy reached a satellite that already forwarded the packet
  InFlight,  // still travelling when the run ended
};

inline constexpr std::size_t kDropReasonCount = 7;
const char* to_string(DropReason r);

/// Bits of the fixed header fields (dest, next encoder, ttl, flags, flow, seq).
inline constexpr std::size_t kFixedHeaderBits = 96;
/// Length field in front of each in-packet filter.
inline constexpr std::size_t kBfLengthBits = 16;
/// Equivalent-path filter length.
inline constexpr std::size_t kEquivalentPathBits = 32;
inline constexpr std::uint16_t kNoEncoder = 0xFFFF;

/// Time a copy spent in each delay class, nanoseconds. Components sum to the
/// end-to-end delay.
struct DelayBreakdown {
  SimTime queuing = 0;
  SimTime transmission = 0;
  SimTime propagation = 0;
  SimTime encoding = 0;

  SimTime total() const { return queuing + transmission + propagation + encoding; }
};

struct Packet {
  HeaderKind kind = HeaderKind::LiR;
  double payload_bits = 8192.0;

  BloomFilter normal_bf;
  std::optional<BloomFilter> eq_bf;

  std::vector<LinkId> elr_list;
  std::size_t elr_cursor = 0;
  unsigned elr_id_bits = 0;

  /// One entry for unicast; the destination set for multicast.
  std::vector<SatId> dests;
  bool multicast = false;
  std::optional<SatId> next_encoder;
  unsigned ttl = 64;

  std::uint32_t flow_id = 0;
  std::uint64_t seq = 0;
  SimTime created_at = 0;
  SimTime last_enqueue_at = 0;
  bool is_misrouted = false;

  // Simulation bookkeeping, not on the wire.
  std::uint64_t packet_id = 0;
  std::vector<LinkId> intended;  // sorted links of the current segment or tree
  DelayBreakdown delay;
  unsigned hops = 0;
  unsigned reencodes = 0;
  unsigned detours = 0;
  unsigned eq_depth = 0;  // detours active in eq_bf

  SatId dest() const { return dests.front(); }
  bool is_dest(SatId s) const;
  bool intends(LinkId id) const;
  void set_intended(std::vector<LinkId> links);
};

/// Header size in bits per the wire layout.
std::size_t header_bits(const Packet& p);
/// header_bits + payload.
double packet_bits(const Packet& p);

/// Serialized header, most significant bit first.
///
/// LiR:   [fixed 96][M:16][BF bits][eq M:16][eq BF bits]   (eq part optional)
/// ELR:   [fixed 96][count:8][remaining ids, elr_id_bits each]
/// Plain: [fixed 96]
/// Multicast packets append [count:8][dest ids:16 each] after the fixed fields.
std::vector<bool> serialize_header(const Packet& p);
std::string header_hex(const Packet& p);

/// Filter holding every link of `path`.
BloomFilter encode_path(std::span<const LinkId> path, std::size_t m, unsigned k, std::uint64_t seed = 0);

/// Outcome of running one packet through a satellite's forwarding logic.
struct ForwardDecision {
  bool deliver = false;
  std::vector<LinkId> forward;  // links whose identifier queried positive
  bool reencode = false;
  bool clear_eq_bf = false;     // no equivalent-path entry matched here
  bool via_equivalent_path = false;
  std::optional<DropReason> drop;
};

/// LiR forwarding at `sat` for a packet that arrived on `incoming` (none at
/// the source).
///
/// A unicast destination consumes the packet without probing. A multicast
/// destination consumes a copy and keeps forwarding. The designated next
/// encoder re-encodes. Otherwise every outgoing link except the reverse of
/// `incoming` is queried and all positives are forwarded; no positive is a
/// dead end. When the packet carries an equivalent-path filter and `eq_table`
/// has a matching entry, that entry's link replaces the filter lookup.
ForwardDecision forward_decision(const Constellation& c, SatId sat, std::optional<LinkId> incoming,
                                 const Packet& pkt, const EquivalentPathTable* eq_table = nullptr);

/// Clears the normal filter and encodes the first segment of `route` (which
/// starts at `sat`) as chosen by `planner`; sets next_encoder to the segment's
/// last node and charges `tau`. Returns NoRoute when `route` is absent.
std::optional<DropReason> re_encode(Packet& pkt, const Constellation& c, SatId sat,
                                    const std::optional<std::vector<LinkId>>& route,
                                    const EncodingPlanner& planner, unsigned k, std::uint64_t hash_seed,
                                    SimTime tau);

/// Same as above with an explicit segment length and filter length.
std::optional<DropReason> re_encode_segment(Packet& pkt, const Constellation& c, SatId sat,
                                            std::span<const LinkId> route, std::size_t segment_length,
                                            std::size_t bits, unsigned k, std::uint64_t hash_seed,
                                            SimTime tau);

/// Explicit-list forwarding: pops the next identifier and forwards on it.
ForwardDecision elr_forward(const Constellation& c, SatId sat, Packet& pkt, const LinkStateTable* truth);

/// Builds an explicit-list packet for `route`.
void elr_encode(Packet& pkt, std::span<const LinkId> route, std::size_t total_links);

}  // namespace lir
