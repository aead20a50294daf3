#ifndef SURFCYC_EMBEDDED_GRAPH_HPP
#define SURFCYC_EMBEDDED_GRAPH_HPP

#include <vector>

#include "surfcyc/error.hpp"
#include "surfcyc/weight.hpp"

namespace surfcyc {

/// One directed side of an edge. `next` is the counterclockwise successor
/// around the origin vertex; `twin` is the reversal. Weights may differ
/// between a dart and its twin (asymmetric model), and may be infinite.
struct Dart {
    int origin = -1;
    int twin = -1;
    int next = -1;
    Weight weight;
};

/// n, m, f, b with chi = n - m + f and genus = (2 - chi - b) / 2.
/// `f` counts interior faces only; boundary cycles are holes, not faces.
struct SurfaceStats {
    int n = 0;
    int m = 0;
    int f = 0;
    int b = 0;
    int chi = 0;
    int genus = 0;
    bool operator==(const SurfaceStats&) const = default;
};

/// Raw rotation-system description consumed by EmbeddedGraph::build.
struct GraphSpec {
    struct DartSpec {
        int origin = -1;
        int head = -1;
        Weight weight;
        int twin = -1;
    };
    int vertex_count = 0;
    std::vector<std::vector<int>> rotation;  // per vertex, dart ids in ccw order
    std::vector<DartSpec> darts;
    std::vector<int> boundary_darts;  // one representative dart per boundary face
};

/// A graph cellularly embedded on an orientable surface, encoded as a
/// rotation system over darts. Immutable after construction; faces are the
/// orbits of next∘twin, so the orbit of a dart is the face to its right.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;  // empty; usable only after assignment

    int vertex_count() const { return vertex_count_; }
    int dart_count() const { return static_cast<int>(darts_.size()); }
    int edge_count() const { return dart_count() / 2; }

    int origin(int d) const { return darts_[d].origin; }
    int twin(int d) const { return darts_[d].twin; }
    int next(int d) const { return darts_[d].next; }
    int prev(int d) const { return prev_[d]; }
    int head(int d) const { return darts_[darts_[d].twin].origin; }
    Weight weight(int d) const { return darts_[d].weight; }
    int face_next(int d) const { return darts_[darts_[d].twin].next; }

    const std::vector<int>& darts_at(int v) const { return rotation_[v]; }
    int degree(int v) const { return static_cast<int>(rotation_[v].size()); }

    int face_count() const { return static_cast<int>(faces_.size()); }
    int face_of(int d) const { return face_of_[d]; }
    /// Orbit of the face, listed from its smallest dart.
    const std::vector<int>& face_darts(int f) const { return faces_[f]; }
    bool face_is_boundary(int f) const { return face_is_boundary_[f] != 0; }
    int boundary_count() const { return boundary_count_; }
    std::vector<int> boundary_faces() const;
    std::vector<int> vertices_on_face(int f) const;
    bool vertex_on_face(int v, int f) const;

    bool connected() const { return component_count_ == 1; }
    int component_count() const { return component_count_; }
    int component_of_vertex(int v) const { return component_of_[v]; }
    int component_of_face(int f) const;

    /// Whole-surface statistics; requires a connected graph.
    SurfaceStats stats() const;
    SurfaceStats component_stats(int comp) const;

    bool has_symmetric_weights() const;

    /// Validates and builds. Rejects disconnected input.
    static EmbeddedGraph build(const GraphSpec& spec);

    /// Variant for surgery results: disconnection allowed, boundary walks
    /// are not required to be simple.
    static EmbeddedGraph build_relaxed(const GraphSpec& spec);

    GraphSpec to_spec() const;

    /// Same darts and rotation, different boundary marks.
    EmbeddedGraph with_boundary_marks(const std::vector<int>& boundary_faces) const;

private:
    static EmbeddedGraph build_impl(const GraphSpec& spec, bool relaxed);

    int vertex_count_ = 0;
    std::vector<Dart> darts_;
    std::vector<int> prev_;
    std::vector<std::vector<int>> rotation_;
    std::vector<int> face_of_;
    std::vector<std::vector<int>> faces_;
    std::vector<char> face_is_boundary_;
    int boundary_count_ = 0;
    std::vector<int> component_of_;
    int component_count_ = 0;
};

} // namespace surfcyc

#endif
