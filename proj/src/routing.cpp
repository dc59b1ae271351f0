#include "lir/routing.hpp"

#include <algorithm>
#include <deque>

namespace lir {

LinkFilter all_links() {
  return [](LinkId) { return true; };
}

namespace {

// Breadth-first search with FIFO order and outgoing links scanned in LinkId
// order; the first discovery of a node is then the lexicographically smallest
// minimum-hop route to it.
struct BfsTree {
  std::vector<int> hops;
  std::vector<LinkId> via;  // link used to reach the node
};

BfsTree bfs(const Constellation& c, SatId src, const LinkFilter& usable, std::optional<SatId> stop) {
  BfsTree t;
  t.hops.assign(c.satellite_count(), -1);
  t.via.assign(c.satellite_count(), LinkId{});
  std::deque<SatId> queue;
  t.hops[src.value] = 0;
  queue.push_back(src);
  while (!queue.empty()) {
    const SatId u = queue.front();
    queue.pop_front();
    if (stop && u == *stop) break;
    for (LinkId id : c.out_links(u)) {
      if (!usable(id)) continue;
      const SatId v = c.link(id).dst;
      if (t.hops[v.value] >= 0) continue;
      t.hops[v.value] = t.hops[u.value] + 1;
      t.via[v.value] = id;
      queue.push_back(v);
    }
  }
  return t;
}

}  // namespace

std::optional<std::vector<LinkId>> compute_route(const Constellation& c, SatId src, SatId dst,
                                                 const LinkFilter& usable) {
  if (!c.valid(src) || !c.valid(dst)) return std::nullopt;
  if (src == dst) return std::vector<LinkId>{};
  const BfsTree t = bfs(c, src, usable, dst);
  if (t.hops[dst.value] < 0) return std::nullopt;
  std::vector<LinkId> route;
  route.reserve(static_cast<std::size_t>(t.hops[dst.value]));
  for (SatId v = dst; v != src;) {
    const LinkId id = t.via[v.value];
    route.push_back(id);
    v = c.link(id).src;
  }
  std::reverse(route.begin(), route.end());
  return route;
}

std::optional<std::vector<LinkId>> compute_route(const Constellation& c, SatId src, SatId dst) {
  return compute_route(c, src, dst, all_links());
}

std::vector<int> hop_distances(const Constellation& c, SatId src, const LinkFilter& usable) {
  return bfs(c, src, usable, std::nullopt).hops;
}

std::vector<SatId> route_nodes(const Constellation& c, SatId src, const std::vector<LinkId>& route) {
  std::vector<SatId> nodes{src};
  for (LinkId id : route) nodes.push_back(c.link(id).dst);
  return nodes;
}

}  // namespace lir
