#ifndef SURFCYC_DIRECTED_CYCLES_HPP
#define SURFCYC_DIRECTED_CYCLES_HPP

#include <optional>

#include "surfcyc/covers.hpp"
#include "surfcyc/homology.hpp"

namespace surfcyc {

/// Shortest cycle crossing lambda an odd number of times, where lambda is a
/// basis cycle (two shortest paths plus an edge) or a shortest-path arc. The
/// minimum over lambda's vertices s of the (s,0)->(s,1) distance in the
/// cyclic double cover, projected back. Empty when every such distance is
/// infinite.
std::optional<CycleWalk> shortest_odd_crossing_cycle(const EmbeddedGraph& g,
                                                     const CycleWalk& lambda);

/// Minimum over the 2g basis cycles of the odd-crossing search, after pasting
/// disks into every boundary. Empty on genus-zero surfaces.
std::optional<CycleWalk> shortest_non_separating_cycle(const EmbeddedGraph& g);

/// Minimum of the non-separating search and, when b >= 2, the odd-crossing
/// searches over the boundary-to-boundary arcs.
std::optional<CycleWalk> shortest_non_null_homologous_cycle(const EmbeddedGraph& g);

/// Full case analysis: non-null-homologous candidates always; separating
/// candidates through restricted cyclic covers (per basis cycle when b = 1,
/// after pasting down to one boundary when b > 1, and through one cover plus
/// recursion when b = 0).
std::optional<CycleWalk> shortest_non_contractible_cycle(const EmbeddedGraph& g);

} // namespace surfcyc

#endif
