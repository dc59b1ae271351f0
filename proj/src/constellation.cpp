#include "lir/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lir {

LinkDirection opposite(LinkDirection d) {
  switch (d) {
    case LinkDirection::IntraForward: return LinkDirection::IntraBackward;
    case LinkDirection::IntraBackward: return LinkDirection::IntraForward;
    case LinkDirection::InterRight: return LinkDirection::InterLeft;
    case LinkDirection::InterLeft: return LinkDirection::InterRight;
  }
  return d;
}

LinkDirection rotate_clockwise(LinkDirection d) {
  // (d_orbit, d_slot) -> (-d_slot, d_orbit)
  switch (d) {
    case LinkDirection::InterRight: return LinkDirection::IntraForward;
    case LinkDirection::IntraForward: return LinkDirection::InterLeft;
    case LinkDirection::InterLeft: return LinkDirection::IntraBackward;
    case LinkDirection::IntraBackward: return LinkDirection::InterRight;
  }
  return d;
}

const char* to_string(LinkDirection d) {
  switch (d) {
    case LinkDirection::IntraForward: return "intra-fwd";
    case LinkDirection::IntraBackward: return "intra-back";
    case LinkDirection::InterRight: return "inter-right";
    case LinkDirection::InterLeft: return "inter-left";
  }
  return "?";
}

double distance(const Vec3& a, const Vec3& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Constellation Constellation::build(unsigned orbits, unsigned sats_per_orbit, double altitude_km,
                                   bool seam, double inclination_deg) {
  if (orbits < 2) throw std::invalid_argument("constellation: need at least 2 orbits");
  if (sats_per_orbit < 3) throw std::invalid_argument("constellation: need at least 3 satellites per orbit");
  if (!(altitude_km > 0)) throw std::invalid_argument("constellation: altitude must be positive");

  Constellation c;
  c.orbits_ = orbits;
  c.sats_per_orbit_ = sats_per_orbit;
  c.altitude_km_ = altitude_km;
  c.inclination_deg_ = inclination_deg;
  c.seam_ = seam;

  const std::size_t n = c.satellite_count();
  c.out_.resize(n);
  c.in_.resize(n);
  c.by_direction_.assign(n, {0, 0, 0, 0});

  auto neighbor = [&](unsigned o, unsigned s, LinkDirection d) -> std::optional<SatId> {
    switch (d) {
      case LinkDirection::IntraForward: return c.sat(o, (s + 1) % sats_per_orbit);
      case LinkDirection::IntraBackward: return c.sat(o, (s + sats_per_orbit - 1) % sats_per_orbit);
      case LinkDirection::InterRight:
        if (seam && o == orbits - 1) return std::nullopt;
        return c.sat((o + 1) % orbits, s);
      case LinkDirection::InterLeft:
        if (seam && o == 0) return std::nullopt;
        return c.sat((o + orbits - 1) % orbits, s);
    }
    return std::nullopt;
  };

  std::uint32_t next_id = 1;
  for (unsigned o = 0; o < orbits; ++o) {
    for (unsigned s = 0; s < sats_per_orbit; ++s) {
      const SatId src = c.sat(o, s);
      for (auto d : kAllDirections) {
        auto dst = neighbor(o, s, d);
        if (!dst) continue;
        const LinkId id{next_id++};
        c.links_.push_back(Link{id, src, *dst, d});
        c.out_[src.value].push_back(id);
        c.in_[dst->value].push_back(id);
        c.by_direction_[src.value][static_cast<std::size_t>(d)] = id.value;
      }
    }
  }
  for (auto& v : c.in_) std::sort(v.begin(), v.end());

  c.reverse_.resize(c.links_.size());
  for (const auto& l : c.links_) {
    const auto back = c.by_direction_[l.dst.value][static_cast<std::size_t>(opposite(l.direction))];
    if (back == 0) throw std::logic_error("constellation: link without reverse");
    c.reverse_[l.id.value - 1] = LinkId{back};
  }
  return c;
}

SatId Constellation::sat(unsigned orbit, unsigned slot) const {
  if (orbit >= orbits_ || slot >= sats_per_orbit_) {
    throw std::out_of_range("constellation: satellite (" + std::to_string(orbit) + "," +
                            std::to_string(slot) + ") out of range");
  }
  return SatId{orbit * sats_per_orbit_ + slot};
}

const Link& Constellation::link(LinkId id) const {
  if (!valid(id)) throw std::out_of_range("constellation: unknown link " + std::to_string(id.value));
  return links_[id.value - 1];
}

std::span<const LinkId> Constellation::out_links(SatId s) const {
  if (!valid(s)) throw std::out_of_range("constellation: unknown satellite " + std::to_string(s.value));
  return out_[s.value];
}

std::span<const LinkId> Constellation::in_links(SatId s) const {
  if (!valid(s)) throw std::out_of_range("constellation: unknown satellite " + std::to_string(s.value));
  return in_[s.value];
}

std::vector<std::pair<LinkId, SatId>> Constellation::neighbors_out(SatId s) const {
  std::vector<std::pair<LinkId, SatId>> out;
  for (auto id : out_links(s)) out.emplace_back(id, link(id).dst);
  return out;
}

std::vector<std::pair<LinkId, SatId>> Constellation::neighbors_in(SatId s) const {
  std::vector<std::pair<LinkId, SatId>> out;
  for (auto id : in_links(s)) out.emplace_back(id, link(id).src);
  return out;
}

std::optional<LinkId> Constellation::link_in_direction(SatId s, LinkDirection d) const {
  if (!valid(s)) return std::nullopt;
  const auto v = by_direction_[s.value][static_cast<std::size_t>(d)];
  if (v == 0) return std::nullopt;
  return LinkId{v};
}

std::optional<LinkId> Constellation::find_link(SatId a, SatId b) const {
  if (!valid(a)) return std::nullopt;
  for (auto id : out_[a.value]) {
    if (links_[id.value - 1].dst == b) return id;
  }
  return std::nullopt;
}

LinkId Constellation::reverse(LinkId id) const {
  if (!valid(id)) throw std::out_of_range("constellation: unknown link " + std::to_string(id.value));
  return reverse_[id.value - 1];
}

Vec3 Constellation::position(SatId s, double t_seconds) const {
  using std::numbers::pi;
  const double r = kEarthRadiusKm + altitude_km_;
  const double omega = std::sqrt(kEarthMuKm3PerS2 / (r * r * r));
  // Iridium-like spacing: planes spread over a half turn of right ascension.
  const double raan = pi * orbit_of(s) / orbits_;
  const double u = 2.0 * pi * slot_of(s) / sats_per_orbit_ + omega * t_seconds;
  const double inc = inclination_deg_ * pi / 180.0;
  const double cu = std::cos(u), su = std::sin(u);
  const double co = std::cos(raan), so = std::sin(raan);
  return Vec3{r * (co * cu - so * su * std::cos(inc)), r * (so * cu + co * su * std::cos(inc)),
              r * (su * std::sin(inc))};
}

double Constellation::propagation_delay(LinkId id, double t_seconds) const {
  const auto& l = link(id);
  return distance(position(l.src, t_seconds), position(l.dst, t_seconds)) / kSpeedOfLightKmPerS;
}

void Constellation::write_csv(std::ostream& os) const {
  os << "link_id,src_orbit,src_slot,dst_orbit,dst_slot,direction\n";
  for (const auto& l : links_) {
    os << l.id.value << ',' << orbit_of(l.src) << ',' << slot_of(l.src) << ',' << orbit_of(l.dst)
       << ',' << slot_of(l.dst) << ',' << to_string(l.direction) << '\n';
  }
}

Constellation build(unsigned orbits, unsigned sats_per_orbit, double altitude_km, bool seam) {
  return Constellation::build(orbits, sats_per_orbit, altitude_km, seam);
}

double propagation_delay(const Constellation& c, LinkId link, double t_seconds) {
  return c.propagation_delay(link, t_seconds);
}

LinkStateTable::LinkStateTable(const Constellation& c)
    : constellation_(&c), up_(c.link_count(), 1), last_change_(c.link_count(), 0) {}

LinkState LinkStateTable::state(LinkId id) const {
  return LinkState{id, is_up(id), last_change_[id.value - 1]};
}

std::size_t LinkStateTable::down_count() const {
  std::size_t n = 0;
  for (auto u : up_) n += (u == 0);
  return n;
}

bool LinkStateTable::set_link_state(LinkId id, bool up, SimTime t) {
  const LinkId back = constellation_->reverse(id);
  const bool changed = is_up(id) != up;
  for (auto l : {id, back}) {
    if (is_up(l) != up) last_change_[l.value - 1] = t;
    up_[l.value - 1] = up ? 1 : 0;
  }
  return changed;
}

}  // namespace lir
