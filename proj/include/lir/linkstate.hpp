#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lir/constellation.hpp"
#include "lir/encoding.hpp"
#include "lir/forwarding.hpp"
#include "lir/routing.hpp"

namespace lir {

enum class FailureManagement : std::uint8_t { None, Lsa, Odr, Odd, OspfLsa };

const char* to_string(FailureManagement m);
std::optional<FailureManagement> parse_failure_management(const std::string& s);

/// One satellite's belief about every link. Its own outgoing links always
/// follow ground truth; remote entries change only through LSAs.
class LinkStateView {
 public:
  LinkStateView() = default;
  explicit LinkStateView(std::size_t link_count) : believed_(link_count, 1) {}

  bool believed_up(LinkId id) const { return believed_[id.value - 1] != 0; }
  /// Returns true if the entry changed.
  bool set(LinkId id, bool up);
  std::uint64_t version() const { return version_; }
  const std::vector<std::uint8_t>& raw() const { return believed_; }

 private:
  std::vector<std::uint8_t> believed_;
  std::uint64_t version_ = 0;
};

/// Links usable by `sat`'s router: its own links per ground truth, remote
/// links per `view` (all up when null), never `exclude`.
LinkFilter view_filter(const Constellation& c, SatId sat, const LinkStateTable& truth,
                       const LinkStateView* view, std::optional<LinkId> exclude = std::nullopt);

/// Link-state advertisement: the origin's outgoing link states.
struct LsaMessage {
  SatId origin;
  std::uint64_t seq = 0;
  std::vector<std::pair<LinkId, bool>> states;
};

/// LSA bookkeeping for one satellite: hello-driven change detection,
/// sequence-numbered flooding with duplicate suppression.
class LsaAgent {
 public:
  LsaAgent(const Constellation& c, SatId self);

  /// Starts from full knowledge of `truth` (views agree at time zero).
  void sync(const LinkStateTable& truth);

  /// Hello tick: when the local links differ from the last advertisement,
  /// returns the LSA to flood (and adopts it locally).
  std::optional<LsaMessage> lsa_tick(const LinkStateTable& truth);

  /// Returns true when `msg` is new (and applied); false for duplicates.
  bool on_receive(const LsaMessage& msg);

  const LinkStateView& view() const { return view_; }
  LinkStateView& view() { return view_; }
  /// Number of LSAs accepted from each origin.
  std::uint64_t accepted(SatId origin) const { return accepted_[origin.value]; }

 private:
  const Constellation* c_;
  SatId self_;
  LinkStateView view_;
  std::vector<std::uint8_t> advertised_;  // own outgoing links, in out_links order
  std::uint64_t next_seq_ = 1;
  std::vector<std::uint64_t> seen_seq_;   // per origin
  std::vector<std::uint64_t> accepted_;
};

/// Equivalent-path key for the counterclockwise detour of a link.
inline constexpr std::uint32_t kCounterclockwiseBit = 0x80000000u;
inline LinkId counterclockwise_key(LinkId id) { return LinkId{id.value | kCounterclockwiseBit}; }
inline LinkId key_link(LinkId key) { return LinkId{key.value & ~kCounterclockwiseBit}; }

/// The three-hop grid detour around `failed`: a quarter turn, the failed
/// link's direction, then back. Nullopt when a hop does not exist (seam).
std::optional<std::array<LinkId, 3>> equivalent_path(const Constellation& c, LinkId failed,
                                                     bool clockwise = true);

/// Per-satellite map from equivalent-path key to local outgoing link.
class EquivalentPathTable {
 public:
  void add(LinkId key, LinkId out);
  std::optional<LinkId> lookup(LinkId key) const;
  /// Entries whose key queries positive in `eq_bf`, in key order.
  std::vector<std::pair<LinkId, LinkId>> matches(const BloomFilter& eq_bf) const;
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<LinkId, LinkId>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<LinkId, LinkId>> entries_;  // sorted by key
};

/// Tables for every satellite; clockwise detours, plus counterclockwise ones
/// under their own keys when requested.
std::vector<EquivalentPathTable> odd_build_tables(const Constellation& c, bool counterclockwise = false);

struct FailureContext {
  const Constellation* c = nullptr;
  const LinkStateTable* truth = nullptr;
  const LinkStateView* view = nullptr;  // null: static neighbor relation
  const EncodingPlanner* planner = nullptr;
  unsigned k = 5;
  std::uint64_t hash_seed = 0;
  SimTime tau = 0;
};

/// On-demand rerouting at `sat` around the locally failed `failed` link.
/// Re-encodes the remaining route (one segment, or the planner's first
/// segment when `segmented`) and returns the link to send on, or NoRoute.
struct RerouteResult {
  std::optional<LinkId> next;
  std::optional<DropReason> drop;
};
RerouteResult odr_handle(const FailureContext& ctx, SatId sat, Packet& pkt, LinkId failed,
                         bool segmented = false);

/// On-demand detouring: activates the equivalent path of `failed` by adding
/// its key to the packet's equivalent-path filter and returns the local
/// detour link. Falls back to the counterclockwise detour only when
/// `fallback` is set; `max_nesting` bounds detours started while already on
/// one.
RerouteResult odd_handle(const FailureContext& ctx, const std::vector<EquivalentPathTable>& tables,
                         SatId sat, Packet& pkt, LinkId failed, bool fallback, unsigned max_nesting);

}  // namespace lir
