#include "surfcyc/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace surfcyc {

GraphAssembler::GraphAssembler(int vertex_count) {
    spec_.vertex_count = vertex_count;
    spec_.rotation.resize(vertex_count);
}

int GraphAssembler::add_edge(int u, int v, Weight w_uv, Weight w_vu) {
    int d = static_cast<int>(spec_.darts.size());
    spec_.darts.push_back({u, v, w_uv, d + 1});
    spec_.darts.push_back({v, u, w_vu, d});
    return d;
}

void GraphAssembler::set_rotation(int v, std::vector<int> darts_ccw) {
    spec_.rotation[v] = std::move(darts_ccw);
}

void GraphAssembler::mark_boundary(int representative_dart) {
    spec_.boundary_darts.push_back(representative_dart);
}

EmbeddedGraph GraphAssembler::build() const { return EmbeddedGraph::build(spec_); }

EmbeddedGraph one_vertex_schema(const std::string& word, Weight w) {
    GraphAssembler a(1);
    std::map<char, int> letter_dart;
    for (char ch : word) {
        char lower = static_cast<char>(std::tolower(ch));
        if (!letter_dart.count(lower)) letter_dart[lower] = a.add_edge(0, 0, w, w);
    }
    std::vector<int> rot;
    for (char ch : word) {
        char lower = static_cast<char>(std::tolower(ch));
        rot.push_back(letter_dart[lower] + (std::isupper(ch) ? 1 : 0));
    }
    a.set_rotation(0, std::move(rot));
    return a.build();
}

EmbeddedGraph torus_one_vertex() { return one_vertex_schema("abAB"); }
EmbeddedGraph octagon_schema() { return one_vertex_schema("abABcdCD"); }

EmbeddedGraph cube_graph() {
    GraphAssembler a(8);
    auto W = Weight(1);
    std::map<std::pair<int, int>, int> dart;  // (u,v) -> dart u->v
    auto edge = [&](int u, int v) {
        int d = a.add_edge(u, v, W, W);
        dart[{u, v}] = d;
        dart[{v, u}] = d + 1;
    };
    // Outer square 0-1-2-3, inner square 4-5-6-7, spokes i -- i+4.
    edge(0, 1); edge(1, 2); edge(2, 3); edge(3, 0);
    edge(4, 5); edge(5, 6); edge(6, 7); edge(7, 4);
    edge(0, 4); edge(1, 5); edge(2, 6); edge(3, 7);
    auto rot = [&](int v, std::initializer_list<int> nbrs) {
        std::vector<int> r;
        for (int u : nbrs) r.push_back(dart.at({v, u}));
        a.set_rotation(v, std::move(r));
    };
    rot(0, {1, 4, 3});
    rot(1, {2, 5, 0});
    rot(2, {3, 6, 1});
    rot(3, {2, 0, 7});
    rot(4, {5, 7, 0});
    rot(5, {6, 4, 1});
    rot(6, {2, 7, 5});
    rot(7, {6, 3, 4});
    return a.build();
}

EmbeddedGraph octahedron_graph() {
    GraphAssembler a(6);
    auto W = Weight(1);
    std::map<std::pair<int, int>, int> dart;
    auto edge = [&](int u, int v) {
        int d = a.add_edge(u, v, W, W);
        dart[{u, v}] = d;
        dart[{v, u}] = d + 1;
    };
    // Hub 0, square 1-2-3-4, outer vertex 5 (planar drawing).
    edge(0, 1); edge(0, 2); edge(0, 3); edge(0, 4);
    edge(1, 2); edge(2, 3); edge(3, 4); edge(4, 1);
    edge(5, 1); edge(5, 2); edge(5, 3); edge(5, 4);
    auto rot = [&](int v, std::initializer_list<int> nbrs) {
        std::vector<int> r;
        for (int u : nbrs) r.push_back(dart.at({v, u}));
        a.set_rotation(v, std::move(r));
    };
    rot(0, {1, 2, 3, 4});
    rot(1, {5, 2, 0, 4});
    rot(2, {5, 3, 0, 1});
    rot(3, {0, 2, 5, 4});
    rot(4, {1, 0, 3, 5});
    rot(5, {1, 4, 3, 2});
    return a.build();
}

EmbeddedGraph torus_grid(int rows, int cols, Weight w) {
    GraphAssembler a(rows * cols);
    auto id = [&](int r, int c) {
        return ((r + rows) % rows) * cols + ((c + cols) % cols);
    };
    std::vector<int> east(rows * cols), north(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            east[id(r, c)] = a.add_edge(id(r, c), id(r, c + 1), w, w);
            north[id(r, c)] = a.add_edge(id(r, c), id(r + 1, c), w, w);
        }
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = id(r, c);
            a.set_rotation(v, {east[v], north[v], east[id(r, c - 1)] + 1,
                               north[id(r - 1, c)] + 1});
        }
    return a.build();
}

EmbeddedGraph cylinder_grid(int face_rows, int cols, Weight w) {
    const int vrows = face_rows + 1;
    GraphAssembler a(vrows * cols);
    auto id = [&](int r, int c) { return r * cols + ((c + cols) % cols); };
    std::vector<int> east(vrows * cols), north(vrows * cols, -1);
    for (int r = 0; r < vrows; ++r)
        for (int c = 0; c < cols; ++c) {
            east[id(r, c)] = a.add_edge(id(r, c), id(r, c + 1), w, w);
            if (r + 1 < vrows)
                north[id(r, c)] = a.add_edge(id(r, c), id(r + 1, c), w, w);
        }
    for (int r = 0; r < vrows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = id(r, c);
            std::vector<int> rot;
            rot.push_back(east[v]);
            if (r + 1 < vrows) rot.push_back(north[v]);
            rot.push_back(east[id(r, c - 1)] + 1);
            if (r > 0) rot.push_back(north[id(r - 1, c)] + 1);
            a.set_rotation(v, std::move(rot));
        }
    GraphSpec spec = a.spec();
    // The two rims: faces whose vertices live entirely in the extreme rows.
    EmbeddedGraph no_marks = EmbeddedGraph::build(spec);
    for (int f = 0; f < no_marks.face_count(); ++f) {
        auto vs = no_marks.vertices_on_face(f);
        bool bottom = std::all_of(vs.begin(), vs.end(),
                                  [&](int v) { return v < cols; });
        bool top = std::all_of(vs.begin(), vs.end(), [&](int v) {
            return v >= (vrows - 1) * cols;
        });
        if (bottom || top) spec.boundary_darts.push_back(no_marks.face_darts(f)[0]);
    }
    return EmbeddedGraph::build(spec);
}

EmbeddedGraph pair_of_pants() {
    GraphAssembler a(9);
    auto W = Weight(1);
    std::map<std::pair<int, int>, int> dart;
    auto edge = [&](int u, int v) {
        int d = a.add_edge(u, v, W, W);
        dart[{u, v}] = d;
        dart[{v, u}] = d + 1;
    };
    // Outer triangle 0-1-2, inner triangles 3-4-5 and 6-7-8, five connectors.
    edge(0, 1); edge(1, 2); edge(2, 0);
    edge(3, 4); edge(4, 5); edge(5, 3);
    edge(6, 7); edge(7, 8); edge(8, 6);
    edge(0, 3); edge(1, 4); edge(2, 7); edge(0, 8); edge(5, 6);
    auto rot = [&](int v, std::initializer_list<int> nbrs) {
        std::vector<int> r;
        for (int u : nbrs) r.push_back(dart.at({v, u}));
        a.set_rotation(v, std::move(r));
    };
    rot(0, {3, 1, 2, 8});
    rot(1, {2, 4, 0});
    rot(2, {0, 7, 1});
    rot(3, {0, 4, 5});
    rot(4, {5, 3, 1});
    rot(5, {6, 3, 4});
    rot(6, {8, 5, 7});
    rot(7, {8, 6, 2});
    rot(8, {0, 6, 7});
    GraphSpec spec = a.spec();
    EmbeddedGraph no_marks = EmbeddedGraph::build(spec);
    for (int f = 0; f < no_marks.face_count(); ++f) {
        auto vs = no_marks.vertices_on_face(f);
        if (vs == std::vector<int>{0, 1, 2} || vs == std::vector<int>{3, 4, 5} ||
            vs == std::vector<int>{6, 7, 8})
            spec.boundary_darts.push_back(no_marks.face_darts(f)[0]);
    }
    return EmbeddedGraph::build(spec);
}

EmbeddedGraph dumbbell(Weight handle_w, Weight neck_w) {
    GraphAssembler a(2);
    int a1 = a.add_edge(0, 0, handle_w, handle_w);
    int b1 = a.add_edge(0, 0, handle_w, handle_w);
    int a2 = a.add_edge(1, 1, handle_w, handle_w);
    int b2 = a.add_edge(1, 1, handle_w, handle_w);
    int n1 = a.add_edge(0, 1, neck_w, neck_w);
    int n2 = a.add_edge(0, 1, neck_w, neck_w);
    // The neck edges sandwich each block's handle loops, so the digon cycle
    // n1 . rev(n2) girdles the neck and splits the two handles apart.
    a.set_rotation(0, {n1, a1, b1, a1 + 1, b1 + 1, n2});
    a.set_rotation(1, {n2 + 1, n1 + 1, a2, b2, a2 + 1, b2 + 1});
    return a.build();
}

std::vector<CorpusEntry> generate_corpus(const CorpusOptions& opts) {
    (void)opts;
    throw Error(ErrorKind::TooLarge, "generator not wired yet");
}

void write_corpus(const std::string& dir, const CorpusOptions& opts) {
    (void)dir;
    (void)opts;
    throw Error(ErrorKind::TooLarge, "generator not wired yet");
}

} // namespace surfcyc
