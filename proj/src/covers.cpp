#include "surfcyc/covers.hpp"

#include <algorithm>
#include <functional>

#include "surfcyc/sides.hpp"

namespace surfcyc {

int CoverGraph::vertex_at(int base_vertex, int level) const {
    return vertex_lut[base_vertex][level];
}

int CoverGraph::dart_at(int base_dart, int origin_level) const {
    return dart_lut[base_dart][origin_level];
}

namespace {

// Shared assembly: given per-(base dart, level) existence and level maps,
// build the cover graph with rotations lifted level-wise (skipping absent
// darts) and boundary faces marked by projection.
void assemble(CoverGraph& cov, const EmbeddedGraph& g,
              const std::vector<std::vector<int>>& vertex_levels,
              const std::vector<std::vector<int>>& dart_levels,
              const std::function<int(int d, int level)>& twin_level) {
    cov.base_vertex_count = g.vertex_count();
    cov.vertex_lut.assign(g.vertex_count(), {-1, -1, -1, -1, -1, -1, -1});
    cov.dart_lut.assign(g.dart_count(), {-1, -1, -1, -1, -1, -1, -1});

    for (int v = 0; v < g.vertex_count(); ++v)
        for (int lvl : vertex_levels[v]) {
            cov.vertex_lut[v][lvl] = static_cast<int>(cov.vertex_base.size());
            cov.vertex_base.push_back(v);
            cov.vertex_level.push_back(lvl);
        }
    std::vector<int> cover_dart_level;
    for (int d = 0; d < g.dart_count(); ++d)
        for (int lvl : dart_levels[d]) {
            cov.dart_lut[d][lvl] = static_cast<int>(cov.dart_base.size());
            cov.dart_base.push_back(d);
            cover_dart_level.push_back(lvl);
        }
    GraphSpec spec;
    spec.vertex_count = static_cast<int>(cov.vertex_base.size());
    spec.rotation.resize(spec.vertex_count);
    spec.darts.resize(cov.dart_base.size());

    for (int cv = 0; cv < spec.vertex_count; ++cv) {
        int v = cov.vertex_base[cv];
        int lvl = cov.vertex_level[cv];
        for (int d : g.darts_at(v)) {
            int cd = cov.dart_lut[d][lvl];
            if (cd >= 0) spec.rotation[cv].push_back(cd);
        }
    }
    for (size_t cd = 0; cd < cov.dart_base.size(); ++cd) {
        int d = cov.dart_base[cd];
        int lvl = cover_dart_level[cd];
        auto& ds = spec.darts[cd];
        ds.origin = cov.vertex_lut[g.origin(d)][lvl];
        ds.weight = g.weight(d);
        ds.twin = cov.dart_lut[g.twin(d)][twin_level(d, lvl)];
        if (ds.origin < 0 || ds.twin < 0)
            throw Error(ErrorKind::OutOfRange, "cover wiring out of range");
    }
    for (size_t cd = 0; cd < cov.dart_base.size(); ++cd)
        spec.darts[cd].head = spec.darts[spec.darts[cd].twin].origin;

    EmbeddedGraph lifted = EmbeddedGraph::build_relaxed(spec);
    if (!lifted.connected())
        throw Error(ErrorKind::Separating,
                    "cover is disconnected; the curve does not qualify");

    // A cover face is a boundary hole iff its projection bounds a hole.
    std::vector<int> marks;
    for (int f = 0; f < lifted.face_count(); ++f) {
        int bd = cov.dart_base[lifted.face_darts(f)[0]];
        if (g.face_is_boundary(g.face_of(bd))) marks.push_back(f);
    }
    cov.graph = lifted.with_boundary_marks(marks);
}

} // namespace

CoverGraph cyclic_double_cover(const EmbeddedGraph& g, const CycleWalk& lambda) {
    SideClassifier cls(g, lambda);
    CoverGraph cov;
    cov.kind = CoverKind::DoubleCover;
    cov.lambda = lambda;

    std::vector<int> eps(g.dart_count());
    for (int d = 0; d < g.dart_count(); ++d) eps[d] = cls.parity_bit(d);

    std::vector<std::vector<int>> vlv(g.vertex_count(), {0, 1});
    std::vector<std::vector<int>> dlv(g.dart_count(), {0, 1});
    assemble(cov, g, vlv, dlv,
             [&](int d, int lvl) { return lvl ^ eps[d]; });
    return cov;
}

CoverGraph restricted_cyclic_cover(const EmbeddedGraph& g, const CycleWalk& lambda) {
    if (!lambda.closed)
        throw Error(ErrorKind::NotCycle, "restricted cover wants a cycle");
    SideClassifier cls(g, lambda);
    CoverGraph cov;
    cov.kind = CoverKind::RestrictedCyclic;
    cov.lambda = lambda;

    const int nd = g.dart_count();
    std::vector<int> contrib(nd);
    std::vector<char> along(nd, 0);
    std::vector<char> leaves_left(nd, 0);
    for (int d = 0; d < nd; ++d) {
        DartSides s = cls.sides(d);
        contrib[d] = s.crossing_contribution();
        along[d] = s.along;
        leaves_left[d] = (s.leaves == Side::Left);
    }

    std::vector<std::vector<int>> vlv(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        int hi = cls.vertex_on_walk(v) ? 6 : 5;
        for (int lvl = 1; lvl <= hi; ++lvl) vlv[v].push_back(lvl);
    }
    // A dart copy exists when the copy of the surface it runs through does:
    // corridor = origin level, minus one when the dart leaves lambda to the
    // left. Darts along lambda live on all six seams.
    std::vector<std::vector<int>> dlv(nd);
    for (int d = 0; d < nd; ++d) {
        if (along[d]) {
            dlv[d] = {1, 2, 3, 4, 5, 6};
            continue;
        }
        int origin_hi = cls.vertex_on_walk(g.origin(d)) ? 6 : 5;
        int head_hi = cls.vertex_on_walk(g.head(d)) ? 6 : 5;
        for (int lvl = 1; lvl <= origin_hi; ++lvl) {
            int corridor = lvl - (leaves_left[d] ? 1 : 0);
            if (corridor < 1 || corridor > 5) continue;
            int head_lvl = lvl + contrib[d];
            if (head_lvl < 1 || head_lvl > head_hi) continue;
            dlv[d].push_back(lvl);
        }
    }

    assemble(cov, g, vlv, dlv,
             [&](int d, int lvl) { return lvl + contrib[d]; });

    // The two new boundary holes: along-lambda faces at the extreme seams.
    int d0 = lambda.darts[0];
    int back0 = g.twin(d0);
    cov.boundary_minus_face = cov.graph.face_of(cov.dart_lut[back0][1]);
    cov.boundary_plus_face = cov.graph.face_of(cov.dart_lut[d0][6]);
    std::vector<int> marks = cov.graph.boundary_faces();
    marks.push_back(cov.boundary_minus_face);
    marks.push_back(cov.boundary_plus_face);
    cov.graph = cov.graph.with_boundary_marks(marks);
    return cov;
}

CycleWalk lift_walk(const CoverGraph& cover, const CycleWalk& w, int start_vertex) {
    if (w.empty()) throw Error(ErrorKind::NotEmbeddedWalk, "empty walk");
    const EmbeddedGraph& cg = cover.graph;
    if (start_vertex < 0 || start_vertex >= cg.vertex_count())
        throw Error(ErrorKind::BasepointMismatch, "no such cover vertex");

    int cur = start_vertex;
    std::vector<int> darts;
    darts.reserve(w.darts.size());
    for (int d : w.darts) {
        int cd = cover.dart_lut[d][cover.vertex_level[cur]];
        if (cd < 0) throw Error(ErrorKind::OutOfRange, "lift leaves the cover");
        if (cg.origin(cd) != cur)
            throw Error(ErrorKind::BasepointMismatch,
                        "start does not project to the walk's start");
        darts.push_back(cd);
        cur = cg.head(cd);
    }
    CycleWalk out;
    out.darts = std::move(darts);
    out.closed = w.closed && cur == start_vertex;
    out.length = w.length;
    return out;
}

CycleWalk project_walk(const CoverGraph& cover, const CycleWalk& w) {
    std::vector<int> darts;
    darts.reserve(w.darts.size());
    for (int cd : w.darts) darts.push_back(cover.dart_base[cd]);
    CycleWalk out;
    out.darts = std::move(darts);
    out.closed = w.closed;
    out.length = w.length;
    return out;
}

} // namespace surfcyc
