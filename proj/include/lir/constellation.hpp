#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lir/bloom_filter.hpp"

namespace lir {

/// Simulation time in integer nanoseconds.
using SimTime = std::int64_t;

inline constexpr SimTime kNanosPerSecond = 1'000'000'000;

constexpr SimTime seconds_to_time(double s) {
  return static_cast<SimTime>(s * 1e9 + (s >= 0 ? 0.5 : -0.5));
}
constexpr double time_to_seconds(SimTime t) { return static_cast<double>(t) * 1e-9; }

inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kSpeedOfLightKmPerS = 299792.458;
inline constexpr double kEarthMuKm3PerS2 = 398600.4418;

/// Satellite index, orbit-major: orbit * sats_per_orbit + slot.
struct SatId {
  std::uint32_t value = 0;

  constexpr SatId() = default;
  constexpr explicit SatId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(const SatId&, const SatId&) = default;
};

/// Grid direction of a link as seen from its source satellite.
enum class LinkDirection : std::uint8_t {
  IntraForward = 0,   // slot + 1
  IntraBackward = 1,  // slot - 1
  InterRight = 2,     // orbit + 1
  InterLeft = 3,      // orbit - 1
};

inline constexpr std::array<LinkDirection, 4> kAllDirections = {
    LinkDirection::IntraForward, LinkDirection::IntraBackward, LinkDirection::InterRight,
    LinkDirection::InterLeft};

LinkDirection opposite(LinkDirection d);
/// Quarter turn in the (orbit, slot) plane: InterRight -> IntraForward -> InterLeft -> ...
LinkDirection rotate_clockwise(LinkDirection d);
const char* to_string(LinkDirection d);

struct Link {
  LinkId id;
  SatId src;
  SatId dst;
  LinkDirection direction = LinkDirection::IntraForward;
};

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

double distance(const Vec3& a, const Vec3& b);

/// Polar-constellation grid: P orbits of S satellites, up to four ISLs each.
///
/// LinkIds are dense from 1, assigned satellite by satellite (orbit-major) and,
/// within a satellite, in LinkDirection order. With the seam enabled, the
/// cross-seam ISLs between orbit P-1 and orbit 0 do not exist.
class Constellation {
 public:
  /// Throws std::invalid_argument unless orbits >= 2 and sats_per_orbit >= 3.
  static Constellation build(unsigned orbits, unsigned sats_per_orbit, double altitude_km,
                             bool seam = false, double inclination_deg = 86.4);

  unsigned orbits() const { return orbits_; }
  unsigned sats_per_orbit() const { return sats_per_orbit_; }
  double altitude_km() const { return altitude_km_; }
  double inclination_deg() const { return inclination_deg_; }
  bool seam_enabled() const { return seam_; }
  std::size_t satellite_count() const { return std::size_t{orbits_} * sats_per_orbit_; }
  std::size_t link_count() const { return links_.size(); }

  SatId sat(unsigned orbit, unsigned slot) const;
  unsigned orbit_of(SatId s) const { return s.value / sats_per_orbit_; }
  unsigned slot_of(SatId s) const { return s.value % sats_per_orbit_; }
  bool valid(SatId s) const { return s.value < satellite_count(); }
  bool valid(LinkId l) const { return l.value >= 1 && l.value <= links_.size(); }

  /// Throws std::out_of_range for unknown ids.
  const Link& link(LinkId id) const;
  std::span<const Link> links() const { return links_; }

  /// Outgoing links of `s` in LinkId order. Throws std::out_of_range for unknown sats.
  std::span<const LinkId> out_links(SatId s) const;
  std::span<const LinkId> in_links(SatId s) const;
  std::vector<std::pair<LinkId, SatId>> neighbors_out(SatId s) const;
  std::vector<std::pair<LinkId, SatId>> neighbors_in(SatId s) const;

  std::optional<LinkId> link_in_direction(SatId s, LinkDirection d) const;
  /// Lowest-id link from a to b, if adjacent.
  std::optional<LinkId> find_link(SatId a, SatId b) const;
  /// The opposite direction of the same physical ISL.
  LinkId reverse(LinkId id) const;

  /// Position (km, Earth-centred) at time t seconds on the circular orbit.
  Vec3 position(SatId s, double t_seconds) const;
  /// Chord length between the link's endpoints divided by c, in seconds.
  double propagation_delay(LinkId id, double t_seconds) const;

  /// CSV rows: link_id,src_orbit,src_slot,dst_orbit,dst_slot,direction.
  void write_csv(std::ostream& os) const;

 private:
  Constellation() = default;

  unsigned orbits_ = 0;
  unsigned sats_per_orbit_ = 0;
  double altitude_km_ = 0;
  double inclination_deg_ = 0;
  bool seam_ = false;
  std::vector<Link> links_;                       // index = id - 1
  std::vector<std::vector<LinkId>> out_;          // per satellite
  std::vector<std::vector<LinkId>> in_;           // per satellite
  std::vector<std::array<std::uint32_t, 4>> by_direction_;  // 0 = absent
  std::vector<LinkId> reverse_;                   // index = id - 1
};

Constellation build(unsigned orbits, unsigned sats_per_orbit, double altitude_km, bool seam);
double propagation_delay(const Constellation& c, LinkId link, double t_seconds);

/// Ground-truth up/down state of every link.
struct LinkState {
  LinkId link;
  bool up = true;
  SimTime last_change = 0;
};

class LinkStateTable {
 public:
  explicit LinkStateTable(const Constellation& c);

  bool is_up(LinkId id) const { return up_[id.value - 1] != 0; }
  LinkState state(LinkId id) const;
  std::size_t down_count() const;

  /// Sets both directions of the physical ISL. Returns true if the state changed.
  bool set_link_state(LinkId id, bool up, SimTime t);

  const std::vector<std::uint8_t>& raw() const { return up_; }

 private:
  const Constellation* constellation_;
  std::vector<std::uint8_t> up_;
  std::vector<SimTime> last_change_;
};

}  // namespace lir
