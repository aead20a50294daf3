#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "surfcyc/corpus.hpp"
#include "surfcyc/oracle.hpp"
#include "surfcyc/sides.hpp"
#include "surfcyc/surf_io.hpp"
#include "surfcyc/surgery.hpp"

using namespace surfcyc;

TEST_CASE("one-vertex torus stats") {
    EmbeddedGraph g = torus_one_vertex();
    SurfaceStats st = g.stats();
    CHECK(st.n == 1);
    CHECK(st.m == 2);
    CHECK(st.f == 1);
    CHECK(st.chi == 0);
    CHECK(st.genus == 1);
    CHECK(st.b == 0);
    CHECK(g.face_count() == 1);
    CHECK(g.face_darts(0).size() == 4);
}

TEST_CASE("cube is a sphere") {
    EmbeddedGraph g = cube_graph();
    SurfaceStats st = g.stats();
    CHECK(st.n == 8);
    CHECK(st.m == 12);
    CHECK(st.f == 6);
    CHECK(st.chi == 2);
    CHECK(st.genus == 0);
    for (int f = 0; f < g.face_count(); ++f) CHECK(g.face_darts(f).size() == 4);
}

TEST_CASE("octagon schema has genus two") {
    EmbeddedGraph g = octagon_schema();
    SurfaceStats st = g.stats();
    CHECK(st.f == 1);
    CHECK(st.chi == -2);
    CHECK(st.genus == 2);
    CHECK(st.b == 0);
}

TEST_CASE("3x3 torus grid faces") {
    EmbeddedGraph g = torus_grid(3, 3);
    SurfaceStats st = g.stats();
    CHECK(st.n == 9);
    CHECK(st.m == 18);
    CHECK(g.face_count() == 9);
    CHECK(st.genus == 1);
    for (int f = 0; f < g.face_count(); ++f) CHECK(g.face_darts(f).size() == 4);
}

TEST_CASE("cylinder grid is an annulus") {
    EmbeddedGraph g = cylinder_grid(3, 3);
    SurfaceStats st = g.stats();
    CHECK(st.n == 12);
    CHECK(st.genus == 0);
    CHECK(st.b == 2);
    CHECK(st.chi == 0);
}

TEST_CASE("pair of pants stats") {
    EmbeddedGraph g = pair_of_pants();
    SurfaceStats st = g.stats();
    CHECK(st.genus == 0);
    CHECK(st.b == 3);
    CHECK(st.chi == -1);
}

TEST_CASE("dumbbell is a closed genus-two surface") {
    EmbeddedGraph g = dumbbell(Weight(10), Weight(1));
    SurfaceStats st = g.stats();
    CHECK(st.genus == 2);
    CHECK(st.b == 0);
    CHECK(st.n == 2);
    CHECK(st.m == 6);
}

TEST_CASE("build rejects malformed input") {
    GraphSpec spec;
    spec.vertex_count = 1;
    spec.rotation = {{0, 1}};
    spec.darts = {{0, 0, Weight(1), 0}, {0, 0, Weight(1), 0}};
    CHECK_THROWS_AS(EmbeddedGraph::build(spec), Error);  // twin fixed point

    spec.darts = {{0, 0, Weight(-1), 1}, {0, 0, Weight(1), 0}};
    CHECK_THROWS_AS(EmbeddedGraph::build(spec), Error);  // negative weight

    // two disjoint loops
    GraphAssembler a(2);
    int e0 = a.add_edge(0, 0, Weight(1), Weight(1));
    int e1 = a.add_edge(1, 1, Weight(1), Weight(1));
    a.set_rotation(0, {e0, e0 + 1});
    a.set_rotation(1, {e1, e1 + 1});
    CHECK_THROWS_AS(a.build(), Error);  // disconnected
}

TEST_CASE("surf round trip is the identity") {
    for (const EmbeddedGraph& g :
         {torus_one_vertex(), cube_graph(), cylinder_grid(3, 3), pair_of_pants(),
          dumbbell(Weight(10), Weight(1))}) {
        std::string text = serialize_surf(g);
        SurfFile file = parse_surf(text);
        EmbeddedGraph h = EmbeddedGraph::build(file.spec);
        CHECK(serialize_surf(h) == text);
    }
}

TEST_CASE("surf handles infinite weights") {
    GraphAssembler a(2);
    int e0 = a.add_edge(0, 1, Weight(3), Weight::infinity());
    int e1 = a.add_edge(1, 0, Weight(2), Weight(2));
    a.set_rotation(0, {e0, e1 + 1});
    a.set_rotation(1, {e1, e0 + 1});
    EmbeddedGraph g = a.build();
    std::string text = serialize_surf(g);
    CHECK(text.find("inf") != std::string::npos);
    EmbeddedGraph h = EmbeddedGraph::build(parse_surf(text).spec);
    CHECK(serialize_surf(h) == text);
}

TEST_CASE("cut along torus generator gives an annulus") {
    EmbeddedGraph g = torus_one_vertex();
    CycleWalk a = make_walk(g, {0}, true);  // loop edge a
    CutResult cut = cut_along(g, a);
    CHECK(cut.graph.connected());
    SurfaceStats st = cut.graph.stats();
    CHECK(st.genus == 0);
    CHECK(st.b == 2);
    CHECK(cut_round_trips(g, a, cut));
}

TEST_CASE("cut along a cube cycle separates") {
    EmbeddedGraph g = cube_graph();
    // girdle 0-1-5-4
    auto dart_between = [&](int u, int v) {
        for (int d : g.darts_at(u))
            if (g.head(d) == v) return d;
        return -1;
    };
    CycleWalk c = make_walk(
        g,
        {dart_between(0, 1), dart_between(1, 5), dart_between(5, 4),
         dart_between(4, 0)},
        true);
    CutResult cut = cut_along(g, c);
    CHECK(cut.graph.component_count() == 2);
    for (int comp = 0; comp < 2; ++comp) {
        SurfaceStats st = cut.graph.component_stats(comp);
        CHECK(st.genus == 0);
        CHECK(st.b == 1);
    }
    CHECK(cut_round_trips(g, c, cut));
}

TEST_CASE("dumbbell neck cycle separates into two handles") {
    EmbeddedGraph g = dumbbell(Weight(1), Weight(1));
    CycleWalk neck = make_walk(g, {8, 11}, true);  // n1 forward, n2 back
    CutResult cut = cut_along(g, neck);
    REQUIRE(cut.graph.component_count() == 2);
    for (int comp = 0; comp < 2; ++comp) {
        SurfaceStats st = cut.graph.component_stats(comp);
        CHECK(st.genus == 1);
        CHECK(st.b == 1);
    }
}

TEST_CASE("paste disk walks the annulus back to a sphere") {
    EmbeddedGraph g = torus_one_vertex();
    CutResult cut = cut_along(g, make_walk(g, {0}, true));
    EmbeddedGraph annulus = cut.graph;
    REQUIRE(annulus.stats().b == 2);
    auto bf = annulus.boundary_faces();
    EmbeddedGraph once = paste_disk(annulus, bf[0]);
    CHECK(once.stats().b == 1);
    CHECK(once.stats().genus == 0);
    EmbeddedGraph twice = paste_disk(once, once.boundary_faces()[0]);
    CHECK(twice.stats().b == 0);
    CHECK(twice.stats().genus == 0);
    CHECK(twice.stats().chi == 2);
    CHECK_THROWS_AS(paste_disk(twice, 0), Error);
}

TEST_CASE("cut round trip on random fixtures") {
    EmbeddedGraph g = torus_grid(3, 3);
    // every horizontal girdle
    for (int r = 0; r < 3; ++r) {
        std::vector<int> darts;
        for (int c = 0; c < 3; ++c) {
            int v = r * 3 + c;
            for (int d : g.darts_at(v))
                if (g.head(d) == r * 3 + (c + 1) % 3 && g.origin(d) == v) {
                    darts.push_back(d);
                    break;
                }
        }
        CycleWalk cyc = make_walk(g, darts, true);
        CutResult cut = cut_along(g, cyc);
        CHECK(cut_round_trips(g, cyc, cut));
        CHECK(cut.graph.connected());
        CHECK(cut.graph.stats().genus == 0);
        CHECK(cut.graph.stats().b == 2);
    }
}

TEST_CASE("edge side on the one-vertex torus") {
    EmbeddedGraph g = torus_one_vertex();
    CycleWalk a = make_walk(g, {0}, true);
    // darts 2,3 are b and its reversal
    SideClass sb = edge_side(g, a, 2);
    SideClass sB = edge_side(g, a, 3);
    // b enters and leaves; one side each, consistently paired
    SideClassifier cls(g, a);
    DartSides db = cls.sides(2);
    DartSides dB = cls.sides(3);
    REQUIRE(db.enters.has_value());
    REQUIRE(db.leaves.has_value());
    CHECK(db.enters != db.leaves);  // b crosses a
    CHECK(dB.enters == db.leaves);
    CHECK(dB.leaves == db.enters);
    CHECK(edge_side(g, a, 0) == SideClass::Along);
    CHECK(edge_side(g, a, 1) == SideClass::Along);
    CHECK(sb != SideClass::Unrelated);
    CHECK(sB != SideClass::Unrelated);
}

TEST_CASE("edge side classification on the torus grid") {
    EmbeddedGraph g = torus_grid(3, 3);
    // horizontal girdle through row 0, heading east
    std::vector<int> darts;
    for (int c = 0; c < 3; ++c)
        for (int d : g.darts_at(c))
            if (g.origin(d) == c && g.head(d) == (c + 1) % 3 && d % 4 != 1) {
                darts.push_back(d);
                break;
            }
    CycleWalk p = make_walk(g, darts, true);
    SideClassifier cls(g, p);
    int crossings_left = 0, crossings_right = 0;
    for (int v = 3; v < 6; ++v) {  // row-1 vertices point south darts into row 0
        for (int d : g.darts_at(v)) {
            if (g.head(d) < 3) {
                DartSides s = cls.sides(d);
                REQUIRE(s.enters.has_value());
                if (s.enters == Side::Left) ++crossings_left;
                if (s.enters == Side::Right) ++crossings_right;
                // reversal leaves from the same side it enters
                CHECK(cls.sides(g.twin(d)).leaves == s.enters);
            }
        }
    }
    // all three vertical darts enter from the same side
    CHECK(crossings_left + crossings_right == 3);
    CHECK((crossings_left == 0 || crossings_right == 0));

    // every dart incident to p but not on it has exactly one side per endpoint
    for (int d = 0; d < g.dart_count(); ++d) {
        DartSides s = cls.sides(d);
        if (s.along) continue;
        if (cls.vertex_on_walk(g.origin(d))) CHECK(s.leaves.has_value());
        if (cls.vertex_on_walk(g.head(d))) CHECK(s.enters.has_value());
    }
}

TEST_CASE("edge side rejects non-simple walks") {
    EmbeddedGraph g = torus_one_vertex();
    CycleWalk w;
    w.darts = {0, 2};  // a then b: revisits the vertex
    w.closed = true;
    w.length = Weight(2);
    CHECK_THROWS_AS(edge_side(g, w, 1), Error);
}

TEST_CASE("separating is equivalent to disconnecting cut") {
    // property linking the cut to the independent homology route
    EmbeddedGraph g = torus_grid(3, 3);
    auto cycles = enumerate_simple_cycles(g, Weight(6));
    int checked = 0;
    for (const auto& c : cycles) {
        CutResult cut = cut_along(g, c);
        bool disconnected = cut.graph.component_count() > 1;
        CHECK(disconnected == is_separating(g, c));
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("surf parse rejects garbage") {
    CHECK_THROWS_AS(parse_surf(""), Error);
    CHECK_THROWS_AS(parse_surf("1 2\n"), Error);
    CHECK_THROWS_AS(parse_surf("1 1 0\n0 1\n0 0 0 x 1\n1 0 0 1 0\n"), Error);
}
