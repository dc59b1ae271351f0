#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lir/constellation.hpp"

namespace lir {

/// Which links a router may use; true means usable.
using LinkFilter = std::function<bool(LinkId)>;

/// Every link usable.
LinkFilter all_links();

/// Minimum-hop route from src to dst over links accepted by `usable`.
///
/// Ties between equal-hop routes go to the lexicographically smallest LinkId
/// sequence (lowest first hop, then lowest second hop, ...). Returns nullopt
/// when dst is unreachable and an empty route when src == dst.
std::optional<std::vector<LinkId>> compute_route(const Constellation& c, SatId src, SatId dst,
                                                 const LinkFilter& usable);

/// Same as compute_route with every link usable.
std::optional<std::vector<LinkId>> compute_route(const Constellation& c, SatId src, SatId dst);

/// Hop distance from src to every satellite (-1 when unreachable).
std::vector<int> hop_distances(const Constellation& c, SatId src, const LinkFilter& usable);

/// Satellites visited by a route starting at src (src first).
std::vector<SatId> route_nodes(const Constellation& c, SatId src, const std::vector<LinkId>& route);

}  // namespace lir
