#ifndef SURFCYC_HOMOLOGY_HPP
#define SURFCYC_HOMOLOGY_HPP

#include <vector>

#include "surfcyc/shortest_paths.hpp"
#include "surfcyc/sides.hpp"
#include "surfcyc/walk.hpp"

namespace surfcyc {

/// Dual of a boundaryless embedded graph: a vertex per face, an edge per
/// primal edge (dart ids are shared), faces correspond to primal vertices.
EmbeddedGraph dual_graph(const EmbeddedGraph& g);

/// Partition of the edges into a shortest-path tree T, leftover edges L, and
/// a cotree C dual to a spanning tree of the dual graph. Edges are named by
/// their smaller dart id. |L| = 2g on a boundaryless surface.
struct TreeCotree {
    int root = -1;
    ShortestPathTree tree;
    std::vector<char> edge_class;  // per edge id: 'T', 'L', or 'C'
    std::vector<int> leftover;     // edge ids in L, ascending
};

TreeCotree greedy_tree_cotree(const EmbeddedGraph& g, int root);

/// The 2g cycles closed by the leftover edges through the tree: for leftover
/// edge u->v the cycle is that edge, the tree path from v up to the meeting
/// vertex, and the tree path down to u. Each cycle is simple and oriented
/// through the leftover dart.
struct HomologyBasis {
    int root = -1;
    std::vector<CycleWalk> cycles;
    std::vector<int> leftover_darts;  // the canonical dart each cycle closes
};

HomologyBasis partial_homology_basis(const EmbeddedGraph& g, int root = 0);

/// Shortest tree paths from a source boundary to each other boundary, trimmed
/// to touch each of the two boundary cycles in exactly one vertex.
struct BoundaryArcs {
    int base_face = -1;           // the source boundary B0
    int source_vertex = -1;       // s on B0
    std::vector<int> target_face; // per arc, the boundary it reaches
    std::vector<CycleWalk> arcs;  // open walks
};

BoundaryArcs boundary_arcs(const EmbeddedGraph& g, int source_vertex);

/// Signed crossings of p with a simple non-separating cycle: left-to-right
/// minus right-to-left, as a sum of per-dart contributions in {-1, 0, +1}.
struct CrossingCount {
    long long value = 0;
};
CrossingCount crossing_count(const EmbeddedGraph& g, const CycleWalk& lambda,
                             const CycleWalk& p);

/// Crossing parity bit; defined for simple non-separating cycles and arcs.
struct CrossingParity {
    int value = 0;
};
CrossingParity crossing_parity(const EmbeddedGraph& g, const CycleWalk& lambda,
                               const CycleWalk& p);

} // namespace surfcyc

#endif
