#include "surfcyc/directed_cycles.hpp"

#include <algorithm>

#include "surfcyc/surgery.hpp"

namespace surfcyc {

namespace {

void consider(std::optional<CycleWalk>& best, std::optional<CycleWalk> cand) {
    if (!cand) return;
    if (!best || walk_less(*cand, *best)) best = std::move(cand);
}

// Case analysis state so the boundaryless reduction recurses exactly once.
std::optional<CycleWalk> noncontractible_impl(const EmbeddedGraph& g, int depth);

} // namespace

std::optional<CycleWalk> shortest_odd_crossing_cycle(const EmbeddedGraph& g,
                                                     const CycleWalk& lambda) {
    CoverGraph cover = cyclic_double_cover(g, lambda);
    std::vector<int> lambda_vertices = walk_vertices(g, lambda);
    std::sort(lambda_vertices.begin(), lambda_vertices.end());
    lambda_vertices.erase(
        std::unique(lambda_vertices.begin(), lambda_vertices.end()),
        lambda_vertices.end());

    std::optional<CycleWalk> best;
    for (int s : lambda_vertices) {
        int from = cover.vertex_at(s, 0);
        int to = cover.vertex_at(s, 1);
        ShortestPathTree t = dijkstra(cover.graph, from);
        if (t.dist[to].is_infinite()) continue;
        CycleWalk lifted = make_walk(cover.graph, t.path_darts(to), /*closed=*/false);
        CycleWalk projected = project_walk(cover, lifted);
        projected.closed = true;  // both endpoints project to s
        consider(best, projected);
    }
    return best;
}

std::optional<CycleWalk> shortest_non_separating_cycle(const EmbeddedGraph& g) {
    EmbeddedGraph capped = paste_all_disks(g);
    if (capped.stats().genus == 0) return std::nullopt;
    HomologyBasis basis = partial_homology_basis(capped, 0);
    std::optional<CycleWalk> best;
    for (const auto& lam : basis.cycles)
        consider(best, shortest_odd_crossing_cycle(capped, lam));
    return best;
}

std::optional<CycleWalk> shortest_non_null_homologous_cycle(const EmbeddedGraph& g) {
    std::optional<CycleWalk> best = shortest_non_separating_cycle(g);
    if (g.boundary_count() >= 2) {
        int b0 = g.boundary_faces()[0];
        int s = g.vertices_on_face(b0)[0];
        BoundaryArcs arcs = boundary_arcs(g, s);
        for (const auto& arc : arcs.arcs)
            consider(best, shortest_odd_crossing_cycle(g, arc));
    }
    return best;
}

namespace {

// One-boundary case: non-null-homologous candidates, plus the projection of
// the shortest non-null-homologous cycle of the restricted cyclic cover over
// every basis cycle.
std::optional<CycleWalk> noncontractible_one_boundary(const EmbeddedGraph& g) {
    std::optional<CycleWalk> best = shortest_non_null_homologous_cycle(g);
    EmbeddedGraph capped = paste_all_disks(g);
    if (capped.stats().genus == 0) return best;
    HomologyBasis basis = partial_homology_basis(capped, 0);
    for (const auto& lam : basis.cycles) {
        CoverGraph cover = restricted_cyclic_cover(g, lam);
        std::optional<CycleWalk> inner =
            shortest_non_null_homologous_cycle(cover.graph);
        if (inner) consider(best, project_walk(cover, *inner));
    }
    return best;
}

std::optional<CycleWalk> noncontractible_impl(const EmbeddedGraph& g, int depth) {
    SurfaceStats st = g.stats();
    if (st.genus == 0 && st.b <= 1) return std::nullopt;  // sphere or disk
    if (st.genus == 0) return shortest_non_null_homologous_cycle(g);

    if (st.b == 1) return noncontractible_one_boundary(g);

    if (st.b > 1) {
        std::optional<CycleWalk> best = shortest_non_null_homologous_cycle(g);
        // Keep one boundary; pasting the rest removes no null-homologous
        // non-contractible cycle and creates no contractible impostors.
        EmbeddedGraph one = g.with_boundary_marks({g.boundary_faces()[0]});
        consider(best, noncontractible_one_boundary(one));
        return best;
    }

    // No boundary: the separating candidates lift into the restricted cyclic
    // cover over any one basis cycle, whose surface has two boundaries, so the
    // recursion terminates after one step.
    if (depth != 0)
        throw Error(ErrorKind::OutOfRange, "recursion reached a closed surface");
    std::optional<CycleWalk> best = shortest_non_null_homologous_cycle(g);
    HomologyBasis basis = partial_homology_basis(g, 0);
    CoverGraph cover = restricted_cyclic_cover(g, basis.cycles[0]);
    if (cover.graph.stats().b != 2)
        throw Error(ErrorKind::OutOfRange, "restricted cover must have two boundaries");
    std::optional<CycleWalk> inner = noncontractible_impl(cover.graph, depth + 1);
    if (inner) consider(best, project_walk(cover, *inner));
    return best;
}

} // namespace

std::optional<CycleWalk> shortest_non_contractible_cycle(const EmbeddedGraph& g) {
    return noncontractible_impl(g, 0);
}

} // namespace surfcyc
