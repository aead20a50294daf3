#include "surfcyc/walk.hpp"

#include <algorithm>

namespace surfcyc {

CycleWalk make_walk(const EmbeddedGraph& g, std::vector<int> darts, bool closed) {
    if (darts.empty()) throw Error(ErrorKind::NotEmbeddedWalk, "empty walk");
    Weight len;
    for (size_t i = 0; i < darts.size(); ++i) {
        int d = darts[i];
        if (d < 0 || d >= g.dart_count())
            throw Error(ErrorKind::NotEmbeddedWalk, "dart out of range");
        if (i + 1 < darts.size() && g.head(d) != g.origin(darts[i + 1]))
            throw Error(ErrorKind::NotEmbeddedWalk, "walk not contiguous");
        len += g.weight(d);
    }
    if (closed && g.head(darts.back()) != g.origin(darts.front()))
        throw Error(ErrorKind::NotEmbeddedWalk, "walk not closed");
    CycleWalk w;
    w.darts = std::move(darts);
    w.closed = closed;
    w.length = len;
    return w;
}

std::vector<int> walk_vertices(const EmbeddedGraph& g, const CycleWalk& w) {
    std::vector<int> vs;
    vs.reserve(w.darts.size() + 1);
    for (int d : w.darts) vs.push_back(g.origin(d));
    if (!w.closed && !w.darts.empty()) vs.push_back(g.head(w.darts.back()));
    return vs;
}

bool is_vertex_simple(const EmbeddedGraph& g, const CycleWalk& w) {
    std::vector<int> vs = walk_vertices(g, w);
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

CycleWalk rotate_canonical(const EmbeddedGraph& g, const CycleWalk& w) {
    if (!w.closed || w.darts.size() <= 1) return w;
    size_t n = w.darts.size();
    size_t best = 0;
    for (size_t s = 1; s < n; ++s) {
        for (size_t i = 0; i < n; ++i) {
            int a = w.darts[(s + i) % n];
            int b = w.darts[(best + i) % n];
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    CycleWalk out;
    out.closed = true;
    out.length = w.length;
    out.darts.reserve(n);
    for (size_t i = 0; i < n; ++i) out.darts.push_back(w.darts[(best + i) % n]);
    (void)g;
    return out;
}

bool walk_less(const CycleWalk& a, const CycleWalk& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.darts < b.darts;
}

} // namespace surfcyc
