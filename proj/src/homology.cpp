#include "surfcyc/homology.hpp"

#include <algorithm>
#include <numeric>

namespace surfcyc {

EmbeddedGraph dual_graph(const EmbeddedGraph& g) {
    if (g.boundary_count() > 0)
        throw Error(ErrorKind::HasBoundary, "dual of a bordered surface");
    GraphSpec spec;
    spec.vertex_count = g.face_count();
    spec.rotation.resize(spec.vertex_count);
    // The rotation around a face-vertex is the face orbit itself; twins are
    // unchanged, so dual faces come out as the primal vertex stars.
    for (int f = 0; f < g.face_count(); ++f) spec.rotation[f] = g.face_darts(f);
    spec.darts.resize(g.dart_count());
    for (int d = 0; d < g.dart_count(); ++d) {
        auto& ds = spec.darts[d];
        ds.origin = g.face_of(d);
        ds.head = g.face_of(g.twin(d));
        ds.twin = g.twin(d);
        ds.weight = g.weight(d);
    }
    return EmbeddedGraph::build(spec);
}

namespace {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        up[a] = b;
        return true;
    }
};

} // namespace

TreeCotree greedy_tree_cotree(const EmbeddedGraph& g, int root) {
    if (g.boundary_count() > 0)
        throw Error(ErrorKind::HasBoundary,
                    "tree-cotree wants a boundaryless surface; paste disks first");
    TreeCotree tc;
    tc.root = root;
    tc.tree = dijkstra(g, root);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (tc.tree.dist[v].is_infinite())
            throw Error(ErrorKind::Unreachable,
                        "vertex " + std::to_string(v) + " unreachable from root");

    const int m = g.edge_count();
    tc.edge_class.assign(m, 'L');
    // Edge ids: position among the smaller darts of each twin pair.
    std::vector<int> eid(g.dart_count(), -1);
    {
        int next_id = 0;
        for (int d = 0; d < g.dart_count(); ++d)
            if (d < g.twin(d)) eid[d] = eid[g.twin(d)] = next_id++;
    }

    for (int v = 0; v < g.vertex_count(); ++v)
        if (tc.tree.parent_dart[v] >= 0) tc.edge_class[eid[tc.tree.parent_dart[v]]] = 'T';

    // Greedy cotree: maximum spanning tree of the dual over non-tree edges,
    // weighted by the length of the fundamental loop the edge would close.
    struct Cand {
        Weight loop_len;
        int edge;
        int dart;
    };
    std::vector<Cand> cands;
    for (int d = 0; d < g.dart_count(); ++d) {
        if (d >= g.twin(d)) continue;
        if (tc.edge_class[eid[d]] == 'T') continue;
        Weight w = std::min(g.weight(d), g.weight(g.twin(d)));
        Weight len = tc.tree.dist[g.origin(d)] + w + tc.tree.dist[g.head(d)];
        cands.push_back({len, eid[d], d});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.loop_len != b.loop_len) return a.loop_len > b.loop_len;
        return a.edge < b.edge;
    });
    UnionFind faces(g.face_count());
    for (const auto& c : cands) {
        if (faces.unite(g.face_of(c.dart), g.face_of(g.twin(c.dart))))
            tc.edge_class[c.edge] = 'C';
    }
    for (int e = 0; e < m; ++e)
        if (tc.edge_class[e] == 'L') tc.leftover.push_back(e);
    return tc;
}

namespace {

// Tree path from the root to v, as forward darts.
std::vector<int> root_path(const ShortestPathTree& t, int v) {
    return t.path_darts(v);
}

} // namespace

HomologyBasis partial_homology_basis(const EmbeddedGraph& g, int root) {
    SurfaceStats st = g.stats();
    if (st.genus == 0) throw Error(ErrorKind::GenusZero, "no homology basis");
    TreeCotree tc = greedy_tree_cotree(g, root);

    HomologyBasis basis;
    basis.root = root;
    std::vector<int> smaller_darts;
    for (int d = 0; d < g.dart_count(); ++d)
        if (d < g.twin(d)) smaller_darts.push_back(d);

    for (int e : tc.leftover) {
        int d = smaller_darts[e];  // canonical dart u->v
        int u = g.origin(d), v = g.head(d);
        std::vector<int> pu = root_path(tc.tree, u);
        std::vector<int> pv = root_path(tc.tree, v);
        size_t common = 0;
        while (common < pu.size() && common < pv.size() && pu[common] == pv[common])
            ++common;
        // Cycle through the meeting vertex: d, then v's branch reversed, then
        // u's branch forward.
        std::vector<int> darts;
        darts.push_back(d);
        for (size_t i = pv.size(); i > common; --i) darts.push_back(g.twin(pv[i - 1]));
        for (size_t i = common; i < pu.size(); ++i) darts.push_back(pu[i]);
        basis.cycles.push_back(make_walk(g, std::move(darts), /*closed=*/true));
        basis.leftover_darts.push_back(d);
    }
    return basis;
}

BoundaryArcs boundary_arcs(const EmbeddedGraph& g, int source_vertex) {
    auto bfaces = g.boundary_faces();
    if (bfaces.size() < 2)
        throw Error(ErrorKind::TooFewBoundaries, "need at least two boundaries");
    int b0 = -1;
    for (int f : bfaces)
        if (g.vertex_on_face(source_vertex, f)) {
            b0 = f;
            break;
        }
    if (b0 < 0)
        throw Error(ErrorKind::InvalidBoundary, "source vertex not on a boundary");

    BoundaryArcs out;
    out.base_face = b0;
    out.source_vertex = source_vertex;
    ShortestPathTree tree = dijkstra(g, source_vertex);

    std::vector<char> on_b0(g.vertex_count(), 0);
    for (int v : g.vertices_on_face(b0)) on_b0[v] = 1;

    for (int f : bfaces) {
        if (f == b0) continue;
        int best = -1;
        for (int v : g.vertices_on_face(f)) {
            if (tree.dist[v].is_infinite()) continue;
            if (best < 0 || tree.dist[v] < tree.dist[best] ||
                (tree.dist[v] == tree.dist[best] && v < best))
                best = v;
        }
        if (best < 0)
            throw Error(ErrorKind::Unreachable,
                        "boundary " + std::to_string(f) + " unreachable");
        std::vector<int> path = tree.path_darts(best);
        std::vector<char> on_f(g.vertex_count(), 0);
        for (int v : g.vertices_on_face(f)) on_f[v] = 1;
        // Trim to the last contact with B0 and the first contact with f after it.
        int start = 0;
        for (size_t i = 0; i < path.size(); ++i)
            if (on_b0[g.origin(path[i])]) start = static_cast<int>(i);
        int end = static_cast<int>(path.size());
        for (int i = start; i < static_cast<int>(path.size()); ++i)
            if (on_f[g.head(path[i])]) {
                end = i + 1;
                break;
            }
        std::vector<int> darts(path.begin() + start, path.begin() + end);
        if (darts.empty())
            throw Error(ErrorKind::InvalidBoundary,
                        "boundaries share a vertex; no proper arc exists");
        out.arcs.push_back(make_walk(g, std::move(darts), /*closed=*/false));
        out.target_face.push_back(f);
    }
    return out;
}

CrossingCount crossing_count(const EmbeddedGraph& g, const CycleWalk& lambda,
                             const CycleWalk& p) {
    SideClassifier cls(g, lambda);
    return CrossingCount{cls.crossing_count_of(p)};
}

CrossingParity crossing_parity(const EmbeddedGraph& g, const CycleWalk& lambda,
                               const CycleWalk& p) {
    SideClassifier cls(g, lambda);
    return CrossingParity{cls.crossing_parity_of(p)};
}

} // namespace surfcyc
