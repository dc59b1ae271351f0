#include <algorithm>

#include <stdexcept>

#include "doctest.h"
#include "lir/multicast.hpp"
#include "lir/routing.hpp"

using namespace lir;

namespace {

bool reaches(const Constellation& c, SatId src, SatId dst, const std::vector<LinkId>& tree) {
  std::vector<SatId> frontier{src}, seen{src};
  while (!frontier.empty()) {
    const SatId at = frontier.back();
    frontier.pop_back();
    if (at == dst) return true;
    for (LinkId l : tree) {
      const SatId next = c.link(l).dst;
      if (c.link(l).src == at && std::find(seen.begin(), seen.end(), next) == seen.end()) {
        seen.push_back(next);
        frontier.push_back(next);
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("two-destination example trees") {
  const auto c = Constellation::build(6, 11, 780.0);
  const SatId src = c.sat(0, 0);
  const std::vector<SatId> dests = {c.sat(1, 2), c.sat(1, 3)};
  const auto spf = *spf_tree(c, src, dests);
  CHECK(spf.size() == 5);
  const SatId primary = choose_primary(c, src, dests);
  CHECK(primary == c.sat(1, 2));
  const auto pnb = *pnb_tree(c, src, dests, primary);
  CHECK(pnb.size() == 4);
  CHECK(std::find(pnb.begin(), pnb.end(), *c.find_link(c.sat(1, 2), c.sat(1, 3))) != pnb.end());
}

TEST_CASE("trees reach every destination") {
  const auto c = Constellation::build(6, 11, 780.0);
  for (std::uint32_t s = 0; s < 66; s += 7) {
    const SatId src{s};
    std::vector<SatId> dests;
    for (std::uint32_t d = (s + 13) % 66; dests.size() < 5; d = (d + 17) % 66) {
      if (SatId{d} != src && std::find(dests.begin(), dests.end(), SatId{d}) == dests.end()) dests.push_back(SatId{d});
    }
    const auto spf = *spf_tree(c, src, dests);
    const auto pnb = *pnb_tree(c, src, dests, choose_primary(c, src, dests));
    CHECK(std::is_sorted(spf.begin(), spf.end()));
    CHECK(std::adjacent_find(spf.begin(), spf.end()) == spf.end());
    for (SatId d : dests) {
      CHECK(reaches(c, src, d, spf));
      CHECK(reaches(c, src, d, pnb));
    }
    std::size_t sum = 0;
    for (SatId d : dests) sum += compute_route(c, src, d)->size();
    CHECK(spf.size() <= sum);
  }
}

TEST_CASE("link-identified multicast delivers one copy per destination") {
  const auto c = Constellation::build(6, 11, 780.0);
  const SatId src = c.sat(0, 0);
  const std::vector<SatId> dests = {c.sat(1, 2), c.sat(1, 3), c.sat(3, 0)};
  const auto tree = *spf_tree(c, src, dests);
  const Packet p = make_multicast_packet(tree, dests, 4096, 5, 1, 64, 8192);
  CHECK(p.multicast);
  const auto w = link_identified_walk(c, src, p);
  for (SatId d : dests) CHECK(w.deliveries.at(d) == 1);
  CHECK(w.duplicates() == 0);
  CHECK(w.transmissions == tree.size());
  CHECK(w.misrouted_transmissions == 0);
  CHECK_FALSE(w.looped());
}

TEST_CASE("node identification duplicates and loops on the three-orbit example") {
  const auto c = Constellation::build(6, 11, 780.0);
  const auto sc = appendix_scenario(c);
  CHECK(sc.tree.size() == 4);
  CHECK(sc.dests.size() == 3);
  const auto demo = node_identified_demo(c, sc.src, sc.dests, sc.tree);
  CHECK(demo.node_identified.duplicates() >= 1);
  CHECK(demo.node_identified.looped());
  CHECK(demo.link_identified.duplicates() == 0);
  CHECK_FALSE(demo.link_identified.looped());
  CHECK(demo.encoded_links == sc.tree);
}
