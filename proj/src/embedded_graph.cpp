#include "surfcyc/embedded_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace surfcyc {

namespace {

void check(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) throw Error(kind, msg);
}

} // namespace

EmbeddedGraph EmbeddedGraph::build(const GraphSpec& spec) {
    return build_impl(spec, /*relaxed=*/false);
}

EmbeddedGraph EmbeddedGraph::build_relaxed(const GraphSpec& spec) {
    return build_impl(spec, /*relaxed=*/true);
}

EmbeddedGraph EmbeddedGraph::build_impl(const GraphSpec& spec, bool relaxed) {
    const int n = spec.vertex_count;
    const int nd = static_cast<int>(spec.darts.size());
    check(n >= 1, ErrorKind::MalformedPermutation, "no vertices");
    check(nd >= 2 && nd % 2 == 0, ErrorKind::MalformedPermutation,
          "dart count must be positive and even");
    check(static_cast<int>(spec.rotation.size()) == n,
          ErrorKind::MalformedPermutation, "rotation table size mismatch");

    EmbeddedGraph g;
    g.vertex_count_ = n;
    g.darts_.resize(nd);
    g.rotation_.assign(spec.rotation.begin(), spec.rotation.end());

    // Twin involution and weights.
    for (int d = 0; d < nd; ++d) {
        const auto& ds = spec.darts[d];
        check(ds.origin >= 0 && ds.origin < n, ErrorKind::MalformedPermutation,
              "dart " + std::to_string(d) + " has bad origin");
        check(ds.twin >= 0 && ds.twin < nd && ds.twin != d,
              ErrorKind::MalformedPermutation,
              "dart " + std::to_string(d) + " has bad twin");
        check(ds.weight >= Weight::zero(), ErrorKind::NegativeWeight,
              "dart " + std::to_string(d));
        g.darts_[d].origin = ds.origin;
        g.darts_[d].twin = ds.twin;
        g.darts_[d].weight = ds.weight;
    }
    for (int d = 0; d < nd; ++d) {
        check(g.darts_[g.darts_[d].twin].twin == d,
              ErrorKind::MalformedPermutation, "twin is not an involution");
        const auto& ds = spec.darts[d];
        check(ds.head == g.darts_[ds.twin].origin,
              ErrorKind::MalformedPermutation,
              "dart " + std::to_string(d) + " head disagrees with twin origin");
    }

    // Rotation lists define `next`; every dart appears exactly once, at its
    // origin vertex.
    std::vector<char> seen(nd, 0);
    for (int v = 0; v < n; ++v) {
        const auto& rot = g.rotation_[v];
        check(!rot.empty(), ErrorKind::MalformedPermutation,
              "vertex " + std::to_string(v) + " has no darts");
        for (size_t i = 0; i < rot.size(); ++i) {
            int d = rot[i];
            check(d >= 0 && d < nd && !seen[d], ErrorKind::MalformedPermutation,
                  "rotation lists are not a permutation");
            seen[d] = 1;
            check(g.darts_[d].origin == v, ErrorKind::MalformedPermutation,
                  "dart " + std::to_string(d) + " listed at wrong vertex");
            g.darts_[d].next = rot[(i + 1) % rot.size()];
        }
    }
    check(std::all_of(seen.begin(), seen.end(), [](char c) { return c; }),
          ErrorKind::MalformedPermutation, "some dart missing from rotations");

    g.prev_.resize(nd);
    for (int d = 0; d < nd; ++d) g.prev_[g.darts_[d].next] = d;

    // Components over the underlying graph.
    g.component_of_.assign(n, -1);
    int comp = 0;
    for (int s = 0; s < n; ++s) {
        if (g.component_of_[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        g.component_of_[s] = comp;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int d : g.rotation_[v]) {
                int w = g.head(d);
                if (g.component_of_[w] < 0) {
                    g.component_of_[w] = comp;
                    q.push(w);
                }
            }
        }
        ++comp;
    }
    g.component_count_ = comp;
    if (!relaxed) {
        check(comp == 1, ErrorKind::Disconnected,
              std::to_string(comp) + " components");
    }

    // Face tracing: orbits of next∘twin, each listed from its smallest dart.
    g.face_of_.assign(nd, -1);
    for (int d = 0; d < nd; ++d) {
        if (g.face_of_[d] >= 0) continue;
        int f = static_cast<int>(g.faces_.size());
        std::vector<int> orbit;
        int cur = d;
        do {
            g.face_of_[cur] = f;
            orbit.push_back(cur);
            cur = g.face_next(cur);
        } while (cur != d);
        g.faces_.push_back(std::move(orbit));
    }

    // An unsigned rotation system always describes an orientable surface;
    // verify the even-characteristic consequence per component.
    for (int c = 0; c < comp; ++c) {
        SurfaceStats cs{};
        std::vector<char> face_seen(g.faces_.size(), 0);
        for (int v = 0; v < n; ++v)
            if (g.component_of_[v] == c) ++cs.n;
        for (int d = 0; d < nd; ++d) {
            if (g.component_of_[g.darts_[d].origin] != c) continue;
            ++cs.m;
            face_seen[g.face_of_[d]] = 1;
        }
        cs.m /= 2;
        int f_all = 0;
        for (size_t f = 0; f < g.faces_.size(); ++f) f_all += face_seen[f];
        int chi_capped = cs.n - cs.m + f_all;
        check(chi_capped <= 2 && (2 - chi_capped) % 2 == 0,
              ErrorKind::NonOrientable, "inconsistent face structure");
    }

    // Boundary marks.
    g.face_is_boundary_.assign(g.faces_.size(), 0);
    for (int d : spec.boundary_darts) {
        check(d >= 0 && d < nd, ErrorKind::InvalidBoundary,
              "boundary dart out of range");
        int f = g.face_of_[d];
        check(!g.face_is_boundary_[f], ErrorKind::InvalidBoundary,
              "face marked boundary twice");
        g.face_is_boundary_[f] = 1;
        ++g.boundary_count_;
        if (!relaxed) {
            // Boundary walks must be simple cycles of edges.
            std::vector<int> vs;
            for (int x : g.faces_[f]) vs.push_back(g.darts_[x].origin);
            std::sort(vs.begin(), vs.end());
            check(std::adjacent_find(vs.begin(), vs.end()) == vs.end(),
                  ErrorKind::InvalidBoundary,
                  "boundary face walk is not a simple cycle");
        }
    }
    return g;
}

std::vector<int> EmbeddedGraph::boundary_faces() const {
    std::vector<int> out;
    for (int f = 0; f < face_count(); ++f)
        if (face_is_boundary_[f]) out.push_back(f);
    return out;
}

std::vector<int> EmbeddedGraph::vertices_on_face(int f) const {
    std::vector<int> vs;
    for (int d : faces_[f]) vs.push_back(darts_[d].origin);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool EmbeddedGraph::vertex_on_face(int v, int f) const {
    for (int d : faces_[f])
        if (darts_[d].origin == v) return true;
    return false;
}

int EmbeddedGraph::component_of_face(int f) const {
    return component_of_[darts_[faces_[f][0]].origin];
}

SurfaceStats EmbeddedGraph::stats() const {
    if (!connected()) throw Error(ErrorKind::Disconnected, "stats of disconnected graph");
    return component_stats(0);
}

SurfaceStats EmbeddedGraph::component_stats(int comp) const {
    SurfaceStats s{};
    for (int v = 0; v < vertex_count_; ++v)
        if (component_of_[v] == comp) ++s.n;
    int darts_in = 0;
    for (int d = 0; d < dart_count(); ++d)
        if (component_of_[darts_[d].origin] == comp) ++darts_in;
    s.m = darts_in / 2;
    int f_all = 0;
    for (int f = 0; f < face_count(); ++f) {
        if (component_of_face(f) != comp) continue;
        ++f_all;
        if (face_is_boundary_[f]) ++s.b;
    }
    s.f = f_all - s.b;
    s.chi = s.n - s.m + s.f;
    s.genus = (2 - s.chi - s.b) / 2;
    return s;
}

bool EmbeddedGraph::has_symmetric_weights() const {
    for (int d = 0; d < dart_count(); ++d)
        if (darts_[d].weight != darts_[darts_[d].twin].weight) return false;
    return true;
}

GraphSpec EmbeddedGraph::to_spec() const {
    GraphSpec spec;
    spec.vertex_count = vertex_count_;
    spec.rotation = rotation_;
    spec.darts.resize(darts_.size());
    for (int d = 0; d < dart_count(); ++d) {
        spec.darts[d].origin = darts_[d].origin;
        spec.darts[d].head = head(d);
        spec.darts[d].weight = darts_[d].weight;
        spec.darts[d].twin = darts_[d].twin;
    }
    for (int f = 0; f < face_count(); ++f)
        if (face_is_boundary_[f]) spec.boundary_darts.push_back(faces_[f][0]);
    return spec;
}

EmbeddedGraph EmbeddedGraph::with_boundary_marks(
    const std::vector<int>& boundary_faces) const {
    GraphSpec spec = to_spec();
    spec.boundary_darts.clear();
    for (int f : boundary_faces) {
        if (f < 0 || f >= face_count())
            throw Error(ErrorKind::InvalidBoundary, "no such face");
        spec.boundary_darts.push_back(faces_[f][0]);
    }
    return build_relaxed(spec);
}

} // namespace surfcyc
