#include "surfcyc/shortest_paths.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace surfcyc {

DigraphView digraph_view(const EmbeddedGraph& g) {
    DigraphView view;
    view.vertex_count = g.vertex_count();
    view.for_each_out = [&g](int v, const std::function<void(int, int, Weight)>& fn) {
        for (int d : g.darts_at(v)) fn(d, g.head(d), g.weight(d));
    };
    return view;
}

std::vector<int> ShortestPathTree::path_darts(int v) const {
    std::vector<int> out;
    while (parent_dart[v] >= 0) {
        out.push_back(parent_dart[v]);
        v = parent_vertex[v];
    }
    std::reverse(out.begin(), out.end());
    return out;
}

ShortestPathTree dijkstra(const DigraphView& g, int source) {
    const int n = g.vertex_count;
    ShortestPathTree t;
    t.dist.assign(n, Weight::infinity());
    t.hops.assign(n, 0);
    t.parent_dart.assign(n, -1);
    t.parent_vertex.assign(n, -1);
    t.source = source;
    t.dist[source] = Weight::zero();

    auto seq_of = [&](int v) { return t.path_darts(v); };

    using Entry = std::tuple<Weight, int, int>;  // dist, hops, vertex
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
    pq.emplace(Weight::zero(), 0, source);
    std::vector<char> settled(n, 0);

    while (!pq.empty()) {
        auto [d, h, v] = pq.top();
        pq.pop();
        if (settled[v] || d != t.dist[v] || h != t.hops[v]) continue;
        settled[v] = 1;
        std::vector<int> v_seq;
        bool v_seq_ready = false;
        g.for_each_out(v, [&](int dart, int w, Weight wt) {
            if (wt.is_infinite() || settled[w]) return;
            Weight nd = d + wt;
            int nh = h + 1;
            if (nd > t.dist[w]) return;
            if (nd == t.dist[w]) {
                if (nh > t.hops[w]) return;
                if (nh == t.hops[w]) {
                    if (!v_seq_ready) {
                        v_seq = seq_of(v);
                        v_seq_ready = true;
                    }
                    std::vector<int> cand = v_seq;
                    cand.push_back(dart);
                    if (!(cand < seq_of(w))) return;
                    t.parent_dart[w] = dart;
                    t.parent_vertex[w] = v;
                    return;  // same key, no re-push needed
                }
            }
            t.dist[w] = nd;
            t.hops[w] = nh;
            t.parent_dart[w] = dart;
            t.parent_vertex[w] = v;
            pq.emplace(nd, nh, w);
        });
    }
    return t;
}

ShortestPathTree dijkstra(const EmbeddedGraph& g, int source) {
    return dijkstra(digraph_view(g), source);
}

} // namespace surfcyc
