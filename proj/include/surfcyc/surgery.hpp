#ifndef SURFCYC_SURGERY_HPP
#define SURFCYC_SURGERY_HPP

#include <vector>

#include "surfcyc/sides.hpp"
#include "surfcyc/walk.hpp"

namespace surfcyc {

/// Result of cutting along a simple cycle or arc. The result may be
/// disconnected (separating cuts). Every vertex and edge of the cut curve
/// appears twice, once on each new boundary.
struct CutResult {
    EmbeddedGraph graph;
    std::vector<int> vertex_to_base;
    std::vector<int> dart_to_base;
    // Copies of the cut curve, per walk position.
    std::vector<int> left_vertex;
    std::vector<int> right_vertex;
    std::vector<int> left_dart;   // copies of c.darts[i]
    std::vector<int> right_dart;
    std::vector<int> new_boundary_faces;
};

CutResult cut_along(const EmbeddedGraph& g, const CycleWalk& c);

/// Re-marks a boundary face as interior. Dart structure is unchanged.
EmbeddedGraph paste_disk(const EmbeddedGraph& g, int boundary_face);

/// Re-marks every boundary face as interior.
EmbeddedGraph paste_all_disks(const EmbeddedGraph& g);

/// Marks an interior face as a boundary hole. Dart structure is unchanged.
EmbeddedGraph puncture_face(const EmbeddedGraph& g, int face);

/// Cut along an embedded subgraph given by one dart per edge. Vertices meeting
/// the subgraph split into one copy per rotation sector; each subgraph edge is
/// doubled. Used to open a surface into its polygonal schema.
struct SubgraphCutResult {
    EmbeddedGraph graph;
    std::vector<int> vertex_to_base;
    std::vector<int> dart_to_base;
    // Per cut edge (input order): the two copies of its canonical dart. The
    // left copy borders the face left of the dart; right borders its right.
    std::vector<int> left_dart;
    std::vector<int> right_dart;
    std::vector<int> new_boundary_faces;
};

SubgraphCutResult cut_along_subgraph(const EmbeddedGraph& g,
                                     const std::vector<int>& edge_darts);

/// Rebuilds the original graph from a cut by re-identifying the two copies.
/// Returns true when the reconstruction matches the original dart for dart.
bool cut_round_trips(const EmbeddedGraph& base, const CycleWalk& c,
                     const CutResult& cut);

} // namespace surfcyc

#endif
