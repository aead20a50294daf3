#include "surfcyc/sides.hpp"

#include <algorithm>

namespace surfcyc {

namespace {

// The two boundary-edge darts leaving an arc endpoint, taken from the
// smallest boundary face through it.
std::pair<int, int> boundary_darts_at(const EmbeddedGraph& g, int v) {
    int face = -1;
    for (int f : g.boundary_faces()) {
        if (g.vertex_on_face(v, f)) {
            face = f;
            break;
        }
    }
    if (face < 0)
        throw Error(ErrorKind::NotEmbeddedWalk,
                    "arc endpoint is not on a boundary face");
    int out_dart = -1, in_dart = -1;
    for (int d : g.face_darts(face)) {
        if (g.origin(d) == v) out_dart = d;
        if (g.head(d) == v) in_dart = d;
    }
    if (out_dart < 0 || in_dart < 0)
        throw Error(ErrorKind::InvalidBoundary, "broken boundary walk");
    return {out_dart, g.twin(in_dart)};
}

} // namespace

SideClassifier::SideClassifier(const EmbeddedGraph& g, const CycleWalk& p)
    : g_(&g), walk_(p) {
    if (p.empty()) throw Error(ErrorKind::NotSimple, "empty walk");
    if (!is_vertex_simple(g, p)) throw Error(ErrorKind::NotSimple, "walk not simple");
    const int k = p.size();
    for (int i = 0; i < k; ++i) {
        int succ = (i + 1 < k) ? p.darts[i + 1]
                               : (p.closed ? p.darts[0] : -1);
        if (succ >= 0 && succ == g.twin(p.darts[i]))
            throw Error(ErrorKind::NotSimple, "walk backtracks along an edge");
    }

    pos_.assign(g.vertex_count(), -1);
    std::vector<int> verts = walk_vertices(g, p);
    for (size_t i = 0; i < verts.size(); ++i) pos_[verts[i]] = static_cast<int>(i);

    along_.assign(g.dart_count(), 0);
    for (int d : p.darts) {
        along_[d] = 1;
        along_[g.twin(d)] = 1;
    }

    leave_.assign(g.dart_count(), -1);
    const int npos = static_cast<int>(verts.size());
    for (int i = 0; i < npos; ++i) {
        int v = verts[i];
        int d_next, d_prev;
        if (p.closed) {
            d_next = p.darts[i];
            d_prev = g.twin(p.darts[(i + k - 1) % k]);
        } else if (i == 0) {
            d_next = p.darts[0];
            auto [c1, c2] = boundary_darts_at(g, v);
            if (d_next == c1 || d_next == c2)
                throw Error(ErrorKind::NotEmbeddedWalk,
                            "arc runs along the boundary at its start");
            // d_prev is the dart toward t; (t, v1, w) must read clockwise,
            // i.e. from the t-dart the w-dart comes counterclockwise-first.
            int cur = g.next(c1);
            bool c1_is_t = false;
            while (cur != c1) {
                if (cur == c2) { c1_is_t = true; break; }
                if (cur == d_next) break;
                cur = g.next(cur);
            }
            d_prev = c1_is_t ? c1 : c2;
        } else if (i == npos - 1) {
            d_prev = g.twin(p.darts[k - 1]);
            auto [c1, c2] = boundary_darts_at(g, v);
            if (d_prev == c1 || d_prev == c2)
                throw Error(ErrorKind::NotEmbeddedWalk,
                            "arc runs along the boundary at its end");
            // d_next is the dart toward t; (t, w, v_{k-1}) must read clockwise,
            // i.e. from the t-dart the prev-dart comes counterclockwise-first.
            int cur = g.next(c1);
            bool c1_is_t = false;
            while (cur != c1) {
                if (cur == d_prev) { c1_is_t = true; break; }
                if (cur == c2) break;
                cur = g.next(cur);
            }
            d_next = c1_is_t ? c1 : c2;
        } else {
            d_next = p.darts[i];
            d_prev = g.twin(p.darts[i - 1]);
        }

        frames_.push_back(Frame{d_next, d_prev});

        // Walking counterclockwise from d_next, every dart through d_prev
        // (inclusive) leaves to the left; the rest leave to the right.
        bool in_left = true;
        int cur = d_next;
        do {
            if (!along_[cur]) leave_[cur] = in_left ? 0 : 1;
            if (cur == d_prev) in_left = false;
            cur = g.next(cur);
        } while (cur != d_next);
    }
}

DartSides SideClassifier::sides(int d) const {
    DartSides s;
    if (along_[d]) {
        s.along = true;
        return s;
    }
    if (leave_[d] >= 0) s.leaves = (leave_[d] == 0) ? Side::Left : Side::Right;
    int t = g_->twin(d);
    if (leave_[t] >= 0) s.enters = (leave_[t] == 0) ? Side::Left : Side::Right;
    return s;
}

long long SideClassifier::crossing_count_of(const CycleWalk& p) const {
    long long c = 0;
    for (int d : p.darts) c += crossing_contribution(d);
    return c;
}

int SideClassifier::crossing_parity_of(const CycleWalk& p) const {
    int b = 0;
    for (int d : p.darts) b ^= parity_bit(d);
    return b;
}

SideClass edge_side(const EmbeddedGraph& g, const CycleWalk& p, int d) {
    SideClassifier cls(g, p);
    DartSides s = cls.sides(d);
    if (s.along) return SideClass::Along;
    if (s.enters)
        return *s.enters == Side::Left ? SideClass::EntersLeft
                                       : SideClass::EntersRight;
    if (s.leaves)
        return *s.leaves == Side::Left ? SideClass::LeavesLeft
                                       : SideClass::LeavesRight;
    return SideClass::Unrelated;
}

} // namespace surfcyc
