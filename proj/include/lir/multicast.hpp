#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lir/constellation.hpp"
#include "lir/forwarding.hpp"
#include "lir/routing.hpp"

namespace lir {

/// Largest destination set a multicast header carries.
inline constexpr std::size_t kMaxMulticastDests = 8;

/// Union of the source-rooted shortest paths to every destination, sorted.
/// Nullopt when some destination is unreachable.
std::optional<std::vector<LinkId>> spf_tree(const Constellation& c, SatId src, const std::vector<SatId>& dests,
                                            const LinkFilter& usable = all_links());

/// route(src, primary) plus route(primary, d) for every other destination.
std::optional<std::vector<LinkId>> pnb_tree(const Constellation& c, SatId src, const std::vector<SatId>& dests,
                                            SatId primary, const LinkFilter& usable = all_links());

/// Destination minimizing hop(src, d) + sum of hop(d, d') over the others;
/// lowest satellite index on ties.
SatId choose_primary(const Constellation& c, SatId src, const std::vector<SatId>& dests,
                     const LinkFilter& usable = all_links());

/// Result of pushing one packet through the grid with zero link delay.
struct WalkReport {
  std::map<SatId, unsigned> deliveries;  // copies consumed per satellite
  std::map<LinkId, unsigned> carried;    // copies sent per link
  unsigned transmissions = 0;
  unsigned misrouted_transmissions = 0;  // on links outside the encoded set
  double misrouted_bits = 0.0;
  unsigned ttl_drops = 0;
  unsigned dead_ends = 0;

  unsigned duplicates() const;
  bool looped() const { return ttl_drops > 0; }
};

/// Floods `pkt` from `src` through LiR forwarding (no failures, no queues).
/// Links in pkt.intended count as correct. Stops after `max_copies` sends.
WalkReport link_identified_walk(const Constellation& c, SatId src, const Packet& pkt,
                                std::size_t max_copies = 1'000'000);

/// Node-identified baseline: the filter holds satellite identifiers and a
/// node forwards to every neighbor (but the sender) that queries positive.
WalkReport node_identified_walk(const Constellation& c, SatId src, const std::vector<SatId>& dests,
                                const std::vector<SatId>& encoded_nodes, std::size_t m, unsigned k, unsigned ttl,
                                std::uint64_t seed = 0, std::size_t max_copies = 1'000'000);

struct DemoReport {
  WalkReport node_identified;
  WalkReport link_identified;
  std::vector<SatId> encoded_nodes;
  std::vector<LinkId> encoded_links;
};

/// Runs both walks for `dests` over `tree` (its satellites are the encoded
/// nodes) at a filter length large enough to make false positives negligible.
DemoReport node_identified_demo(const Constellation& c, SatId src, const std::vector<SatId>& dests,
                                const std::vector<LinkId>& tree, unsigned k = 5, unsigned ttl = 64,
                                std::uint64_t seed = 0);

/// Three-orbit example tree: (0,0)->(1,0), (1,0)->(1,1), (1,0)->(2,0),
/// (2,0)->(2,1), with destinations (1,1), (2,1), (2,0).
struct DemoScenario {
  SatId src;
  std::vector<SatId> dests;
  std::vector<LinkId> tree;
};
DemoScenario appendix_scenario(const Constellation& c);

/// Multicast packet over `tree` at M = optimal_bf(|tree|).
Packet make_multicast_packet(const std::vector<LinkId>& tree, const std::vector<SatId>& dests, std::size_t bits,
                             unsigned k, std::uint64_t hash_seed, unsigned ttl, double payload_bits);

}  // namespace lir
