#ifndef SURFCYC_WALK_HPP
#define SURFCYC_WALK_HPP

#include <vector>

#include "surfcyc/embedded_graph.hpp"

namespace surfcyc {

/// A directed walk of darts, head-to-tail contiguous. `closed` means the
/// last dart's head equals the first dart's origin. `length` is the sum of
/// member weights.
struct CycleWalk {
    std::vector<int> darts;
    bool closed = true;
    Weight length;

    bool empty() const { return darts.empty(); }
    int size() const { return static_cast<int>(darts.size()); }
};

/// Validates contiguity/closure and computes the length.
CycleWalk make_walk(const EmbeddedGraph& g, std::vector<int> darts, bool closed);

/// Vertex sequence: origins of the darts, plus the final head for open walks.
std::vector<int> walk_vertices(const EmbeddedGraph& g, const CycleWalk& w);

/// No repeated vertices (for closed walks, except the wrap-around).
bool is_vertex_simple(const EmbeddedGraph& g, const CycleWalk& w);

/// Canonical representative of a closed walk under rotation: lexicographically
/// minimal dart sequence.
CycleWalk rotate_canonical(const EmbeddedGraph& g, const CycleWalk& w);

/// (length, dart sequence) ordering used wherever candidates tie-break.
bool walk_less(const CycleWalk& a, const CycleWalk& b);

} // namespace surfcyc

#endif
