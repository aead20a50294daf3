#ifndef SURFCYC_COVERS_HPP
#define SURFCYC_COVERS_HPP

#include <array>
#include <vector>

#include "surfcyc/walk.hpp"

namespace surfcyc {

enum class CoverKind { DoubleCover, RestrictedCyclic };

/// A covering graph built by a voltage construction over a simple
/// non-separating cycle or arc, together with the covering map.
///
/// Double cover: vertices (v, z) for z in {0, 1}; the dart (d, z) runs to
/// level z xor e(d) where e is the crossing-parity bit of d against lambda.
///
/// Restricted cyclic cover (cycles only): vertices (v, i) with i in 1..5 off
/// lambda and 1..6 on it; the dart (d, i) runs to level i + c(d) where c is
/// the signed crossing contribution. Level 1 along lambda is one new boundary
/// (lambda-minus, bordering copy 1), level 6 the other (lambda-plus).
class CoverGraph {
public:
    EmbeddedGraph graph;
    CoverKind kind;
    CycleWalk lambda;

    std::vector<int> vertex_base;   // cover vertex -> base vertex
    std::vector<int> vertex_level;  // double: 0/1; restricted: 1..6
    std::vector<int> dart_base;     // cover dart -> base dart
    int base_vertex_count = 0;

    int boundary_minus_face = -1;  // restricted only
    int boundary_plus_face = -1;

    int vertex_at(int base_vertex, int level) const;
    int dart_at(int base_dart, int origin_level) const;
    int pi(int cover_vertex) const { return vertex_base[cover_vertex]; }

    std::vector<std::array<int, 7>> vertex_lut;  // [base][level]
    std::vector<std::array<int, 7>> dart_lut;
};

CoverGraph cyclic_double_cover(const EmbeddedGraph& g, const CycleWalk& lambda);
CoverGraph restricted_cyclic_cover(const EmbeddedGraph& g, const CycleWalk& lambda);

/// Unique lift of a base walk starting at the given cover vertex. Throws
/// BasepointMismatch when the start does not project to the walk's start and
/// OutOfRange when the running level leaves the cover.
CycleWalk lift_walk(const CoverGraph& cover, const CycleWalk& w, int start_vertex);

/// Projection along the covering map; preserves length.
CycleWalk project_walk(const CoverGraph& cover, const CycleWalk& w);

} // namespace surfcyc

#endif
