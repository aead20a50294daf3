#include "surfcyc/oracle.hpp"

#include <algorithm>
#include <functional>

#include "surfcyc/homology.hpp"
#include "surfcyc/surgery.hpp"

namespace surfcyc {

const char* cycle_class_name(CycleClass c) {
    switch (c) {
        case CycleClass::NonSeparating: return "nonsep";
        case CycleClass::NonContractible: return "noncon";
        case CycleClass::NonNullHomologous: return "nonhom";
    }
    return "?";
}

std::vector<CycleWalk> enumerate_simple_cycles(const EmbeddedGraph& g,
                                               Weight max_weight,
                                               long long cap) {
    std::vector<CycleWalk> out;
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<int> stack;
    long long work = 0;

    // Cycles are rooted at their smallest vertex; interior vertices are
    // strictly larger. Both traversal directions appear separately.
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::function<void(int, Weight)> dfs = [&](int v, Weight len) {
            if (++work > cap) throw Error(ErrorKind::TooLarge, "cycle cap hit");
            for (int d : g.darts_at(v)) {
                if (g.weight(d).is_infinite()) continue;
                Weight nl = len + g.weight(d);
                if (nl > max_weight) continue;
                int h = g.head(d);
                if (h == s) {
                    if (stack.size() == 1 && d == g.twin(stack[0])) continue;
                    stack.push_back(d);
                    out.push_back(make_walk(g, stack, /*closed=*/true));
                    stack.pop_back();
                    continue;
                }
                if (h < s || used[h]) continue;
                used[h] = 1;
                stack.push_back(d);
                dfs(h, nl);
                stack.pop_back();
                used[h] = 0;
            }
        };
        used[s] = 1;
        dfs(s, Weight::zero());
        used[s] = 0;
    }
    return out;
}

HomologyTester::HomologyTester(const EmbeddedGraph& g) : g_(&g) {
    words_ = (g.edge_count() + 63) / 64;
    // Edge index per dart: rank of the pair's smaller dart.
    eidx_.assign(g.dart_count(), -1);
    int next = 0;
    for (int d = 0; d < g.dart_count(); ++d)
        if (d < g.twin(d)) {
            eidx_[d] = next;
            eidx_[g.twin(d)] = next;
            ++next;
        }

    auto insert = [&](std::vector<std::vector<std::uint64_t>>& basis,
                      std::vector<std::uint64_t> v) {
        for (const auto& row : basis) {
            int lead = -1;
            for (int w = 0; w < words_ && lead < 0; ++w)
                if (row[w]) lead = w * 64 + __builtin_ctzll(row[w]);
            if (lead >= 0 && (v[lead / 64] >> (lead % 64)) & 1)
                for (int w = 0; w < words_; ++w) v[w] ^= row[w];
        }
        if (std::any_of(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; }))
            basis.push_back(std::move(v));
    };

    for (int f = 0; f < g.face_count(); ++f) {
        std::vector<std::uint64_t> v(words_, 0);
        for (int d : g.face_darts(f)) v[eidx_[d] / 64] ^= 1ull << (eidx_[d] % 64);
        insert(all_basis_, v);
        if (!g.face_is_boundary(f)) insert(interior_basis_, std::move(v));
    }
}

std::vector<std::uint64_t> HomologyTester::edge_vector(const CycleWalk& c) const {
    std::vector<std::uint64_t> v(words_, 0);
    for (int d : c.darts) v[eidx_[d] / 64] ^= 1ull << (eidx_[d] % 64);
    return v;
}

namespace {

bool in_span(const std::vector<std::vector<std::uint64_t>>& basis,
             std::vector<std::uint64_t> v) {
    int words = static_cast<int>(v.size());
    for (const auto& row : basis) {
        int lead = -1;
        for (int w = 0; w < words && lead < 0; ++w)
            if (row[w]) lead = w * 64 + __builtin_ctzll(row[w]);
        if (lead >= 0 && (v[lead / 64] >> (lead % 64)) & 1)
            for (int w = 0; w < words; ++w) v[w] ^= row[w];
    }
    return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

} // namespace

bool HomologyTester::null_homologous(const CycleWalk& c) const {
    return in_span(interior_basis_, edge_vector(c));
}

bool HomologyTester::capped_null_homologous(const CycleWalk& c) const {
    return in_span(all_basis_, edge_vector(c));
}

bool is_separating(const EmbeddedGraph& g, const CycleWalk& c) {
    if (!is_vertex_simple(g, c) || !c.closed)
        throw Error(ErrorKind::NotSimple, "separation test wants a simple cycle");
    HomologyTester t(g);
    return t.capped_null_homologous(c);
}

bool is_null_homologous(const EmbeddedGraph& g, const CycleWalk& c) {
    if (!is_vertex_simple(g, c) || !c.closed)
        throw Error(ErrorKind::NotSimple, "homology test wants a simple cycle");
    HomologyTester t(g);
    return t.null_homologous(c);
}

bool is_contractible(const EmbeddedGraph& g, const CycleWalk& c) {
    if (!is_vertex_simple(g, c) || !c.closed)
        throw Error(ErrorKind::NotSimple, "contractibility test wants a simple cycle");
    CutResult cut = cut_along(g, c);
    const EmbeddedGraph& h = cut.graph;

    int left_face = h.face_of(cut.left_dart[0]);
    int right_face = h.face_of(h.twin(cut.right_dart[0]));
    for (int side_face : {left_face, right_face}) {
        int comp = h.component_of_face(side_face);
        SurfaceStats st = h.component_stats(comp);
        if (st.genus != 0 || st.b != 1) continue;
        // The lone boundary must be the new copy itself, not an original hole.
        bool only_new = true;
        for (int f = 0; f < h.face_count(); ++f) {
            if (!h.face_is_boundary(f) || h.component_of_face(f) != comp) continue;
            if (f != side_face) only_new = false;
        }
        if (only_new) return true;
    }
    return false;
}

bool separates_boundary_pair(const EmbeddedGraph& g, const CycleWalk& c,
                             int face_a, int face_b) {
    CutResult cut = cut_along(g, c);
    const EmbeddedGraph& h = cut.graph;
    auto comp_of_base_face = [&](int base_face) {
        for (int d = 0; d < h.dart_count(); ++d)
            if (g.face_of(cut.dart_to_base[d]) == base_face)
                return h.component_of_vertex(h.origin(d));
        return -1;
    };
    int ca = comp_of_base_face(face_a);
    int cb = comp_of_base_face(face_b);
    return ca >= 0 && cb >= 0 && ca != cb;
}

bool in_class(const EmbeddedGraph& g, const CycleWalk& c, CycleClass cls) {
    switch (cls) {
        case CycleClass::NonSeparating: return !is_separating(g, c);
        case CycleClass::NonContractible: return !is_contractible(g, c);
        case CycleClass::NonNullHomologous: return !is_null_homologous(g, c);
    }
    return false;
}

std::optional<CycleWalk> brute_force_shortest(const EmbeddedGraph& g,
                                              CycleClass cls) {
    std::vector<CycleWalk> all = enumerate_simple_cycles(g, Weight::infinity());
    HomologyTester tester(g);
    std::optional<CycleWalk> best;
    for (const auto& c : all) {
        if (best && !walk_less(c, *best)) continue;
        bool nontrivial = false;
        switch (cls) {
            case CycleClass::NonSeparating:
                nontrivial = !tester.capped_null_homologous(c);
                break;
            case CycleClass::NonNullHomologous:
                nontrivial = !tester.null_homologous(c);
                break;
            case CycleClass::NonContractible:
                nontrivial = !is_contractible(g, c);
                break;
        }
        if (nontrivial) best = c;
    }
    return best;
}

std::optional<Weight> shortest_nontrivial_walk_length(const EmbeddedGraph& g,
                                                      CycleClass cls) {
    if (cls == CycleClass::NonContractible) return std::nullopt;
    // Parity generators: basis cycles of the capped surface, plus the
    // boundary arcs for the relative (null-homology) test.
    std::vector<std::vector<int>> bits;  // per generator: bit per dart
    EmbeddedGraph capped = paste_all_disks(g);
    if (capped.stats().genus >= 1) {
        HomologyBasis basis = partial_homology_basis(capped, 0);
        for (const auto& lam : basis.cycles) {
            SideClassifier cls_l(capped, lam);
            std::vector<int> v(g.dart_count());
            for (int d = 0; d < g.dart_count(); ++d) v[d] = cls_l.parity_bit(d);
            bits.push_back(std::move(v));
        }
    }
    if (cls == CycleClass::NonNullHomologous && g.boundary_count() >= 2) {
        int b0 = g.boundary_faces()[0];
        int s = g.vertices_on_face(b0)[0];
        BoundaryArcs arcs = boundary_arcs(g, s);
        for (const auto& arc : arcs.arcs) {
            SideClassifier cls_a(g, arc);
            std::vector<int> v(g.dart_count());
            for (int d = 0; d < g.dart_count(); ++d) v[d] = cls_a.parity_bit(d);
            bits.push_back(std::move(v));
        }
    }
    const int k = static_cast<int>(bits.size());
    if (k == 0) return std::nullopt;
    const int levels = 1 << k;
    std::vector<int> sigma(g.dart_count(), 0);
    for (int d = 0; d < g.dart_count(); ++d)
        for (int i = 0; i < k; ++i)
            if (bits[i][d]) sigma[d] |= 1 << i;

    DigraphView view;
    view.vertex_count = g.vertex_count() * levels;
    view.for_each_out = [&](int x, const std::function<void(int, int, Weight)>& fn) {
        int v = x / levels, lv = x % levels;
        for (int d : g.darts_at(v))
            fn(d * levels + lv, g.head(d) * levels + (lv ^ sigma[d]), g.weight(d));
    };

    std::optional<Weight> best;
    for (int v = 0; v < g.vertex_count(); ++v) {
        ShortestPathTree t = dijkstra(view, v * levels);
        for (int lv = 1; lv < levels; ++lv) {
            Weight d = t.dist[v * levels + lv];
            if (!d.is_infinite() && (!best || d < *best)) best = d;
        }
    }
    return best;
}

} // namespace surfcyc
