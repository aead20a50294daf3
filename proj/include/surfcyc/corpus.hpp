#ifndef SURFCYC_CORPUS_HPP
#define SURFCYC_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfcyc/embedded_graph.hpp"

namespace surfcyc {

/// Incremental builder: add edges (getting the two dart ids), then give each
/// vertex its counterclockwise dart order.
class GraphAssembler {
public:
    explicit GraphAssembler(int vertex_count);

    /// Returns the dart u->v; its twin is the returned id + 1.
    int add_edge(int u, int v, Weight w_uv, Weight w_vu);
    int add_edge(int u, int v, Weight w) { return add_edge(u, v, w, w); }

    void set_rotation(int v, std::vector<int> darts_ccw);
    void mark_boundary(int representative_dart);

    EmbeddedGraph build() const;
    GraphSpec spec() const { return spec_; }

private:
    GraphSpec spec_;
};

// ---- canonical fixtures ---------------------------------------------------

/// One-vertex polygonal schema. Word letters a..z / A..Z, uppercase = the
/// reversal of the lowercase edge; the word is the rotation order.
EmbeddedGraph one_vertex_schema(const std::string& word, Weight w = Weight(1));

EmbeddedGraph torus_one_vertex();                  // a b A B, genus 1
EmbeddedGraph octagon_schema();                    // a b A B c d C D, genus 2
EmbeddedGraph cube_graph();                        // sphere, 8 vertices
EmbeddedGraph octahedron_graph();                  // sphere, 6 vertices
EmbeddedGraph torus_grid(int rows, int cols, Weight w = Weight(1));
/// Grid on a cylinder with `face_rows` rows of square faces; the two rims are
/// boundary cycles.
EmbeddedGraph cylinder_grid(int face_rows, int cols, Weight w = Weight(1));
/// Octahedron with three pairwise disjoint faces opened as boundaries.
EmbeddedGraph pair_of_pants();
/// Two one-vertex torus blocks joined by two parallel neck edges; genus 2.
EmbeddedGraph dumbbell(Weight handle_w, Weight neck_w);

// ---- deterministic corpus generator ---------------------------------------

struct CorpusOptions {
    std::uint64_t seed = 7;
    int count = 120;
    int max_vertices = 14;
    int max_weight = 20;
};

struct CorpusEntry {
    std::string name;
    EmbeddedGraph graph;
    bool symmetric;
};

/// Seeded family over g in 0..2 and b in 0..3, canonical fixtures included,
/// with symmetric and asymmetric integer weights.
std::vector<CorpusEntry> generate_corpus(const CorpusOptions& opts);

/// Writes SURF files plus a manifest with oracle expectations per class.
void write_corpus(const std::string& dir, const CorpusOptions& opts);

} // namespace surfcyc

#endif
