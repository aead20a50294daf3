#ifndef SURFCYC_SHORTEST_PATHS_HPP
#define SURFCYC_SHORTEST_PATHS_HPP

#include <functional>
#include <vector>

#include "surfcyc/embedded_graph.hpp"

namespace surfcyc {

/// Adjacency abstraction so the same search runs on embedded graphs, covers,
/// and glued complexes. Darts are arbitrary integer labels here.
struct DigraphView {
    int vertex_count = 0;
    std::function<void(int v, const std::function<void(int dart, int head, Weight w)>&)>
        for_each_out;
};

DigraphView digraph_view(const EmbeddedGraph& g);

/// Single-source shortest paths with deterministic tie-breaking: paths are
/// compared by (length, hop count, lexicographic dart-id sequence).
struct ShortestPathTree {
    std::vector<Weight> dist;
    std::vector<int> hops;
    std::vector<int> parent_dart;    // -1 at source and unreached vertices
    std::vector<int> parent_vertex;  // -1 likewise
    int source = -1;

    bool reached(int v) const { return parent_vertex[v] >= 0 || v == source; }
    /// Darts of the source->v path in forward order.
    std::vector<int> path_darts(int v) const;
};

ShortestPathTree dijkstra(const DigraphView& g, int source);
ShortestPathTree dijkstra(const EmbeddedGraph& g, int source);

} // namespace surfcyc

#endif
