#include "surfcyc/surgery.hpp"

#include <algorithm>
#include <set>

namespace surfcyc {

namespace {

std::vector<int> inherited_boundary(const EmbeddedGraph& base,
                                    const EmbeddedGraph& cut,
                                    const std::vector<int>& dart_to_base) {
    std::vector<int> faces;
    for (int f = 0; f < cut.face_count(); ++f) {
        for (int d : cut.face_darts(f)) {
            int bf = base.face_of(dart_to_base[d]);
            if (base.face_is_boundary(bf)) {
                faces.push_back(f);
                break;
            }
        }
    }
    return faces;
}

} // namespace

CutResult cut_along(const EmbeddedGraph& g, const CycleWalk& c) {
    SideClassifier cls(g, c);
    const int k = c.size();
    const std::vector<int> verts = walk_vertices(g, c);
    const int npos = static_cast<int>(verts.size());
    const int nd = g.dart_count();

    CutResult res;
    res.left_vertex.assign(npos, -1);
    res.right_vertex.assign(npos, -1);
    res.left_dart.resize(k);
    res.right_dart.resize(k);

    // New vertex ids: off-walk vertices first, then left copies, then right.
    std::vector<int> off_id(g.vertex_count(), -1);
    int nv = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!cls.vertex_on_walk(v)) off_id[v] = nv++;
    for (int i = 0; i < npos; ++i) res.left_vertex[i] = nv++;
    for (int i = 0; i < npos; ++i) res.right_vertex[i] = nv++;

    res.vertex_to_base.resize(nv);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (off_id[v] >= 0) res.vertex_to_base[off_id[v]] = v;
    for (int i = 0; i < npos; ++i) {
        res.vertex_to_base[res.left_vertex[i]] = verts[i];
        res.vertex_to_base[res.right_vertex[i]] = verts[i];
    }

    // Dart ids: originals keep their id (left copies of the cut darts reuse
    // theirs); right copies are appended pairwise.
    for (int i = 0; i < k; ++i) {
        res.left_dart[i] = c.darts[i];
        res.right_dart[i] = nd + 2 * i;
    }
    res.dart_to_base.resize(nd + 2 * k);
    for (int d = 0; d < nd; ++d) res.dart_to_base[d] = d;
    for (int i = 0; i < k; ++i) {
        res.dart_to_base[nd + 2 * i] = c.darts[i];
        res.dart_to_base[nd + 2 * i + 1] = g.twin(c.darts[i]);
    }

    GraphSpec spec;
    spec.vertex_count = nv;
    spec.rotation.resize(nv);
    spec.darts.resize(nd + 2 * k);

    std::vector<int> origin_of(nd + 2 * k, -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (off_id[v] < 0) continue;
        spec.rotation[off_id[v]] = g.darts_at(v);
        for (int d : g.darts_at(v)) origin_of[d] = off_id[v];
    }
    for (int i = 0; i < npos; ++i) {
        const bool has_out = c.closed || i < npos - 1;
        const bool has_in = c.closed || i > 0;
        const int out_d = has_out ? c.darts[i % k] : -1;
        const int in_d = has_in ? g.twin(c.darts[(i - 1 + k) % k]) : -1;
        const int in_pos = (i - 1 + k) % k;
        auto& left = spec.rotation[res.left_vertex[i]];
        auto& right = spec.rotation[res.right_vertex[i]];
        int cur = cls.frame(i).d_next;
        do {
            if (has_out && cur == out_d) {
                left.push_back(cur);  // left copy reuses the id
                right.push_back(res.right_dart[i % k]);
            } else if (has_in && cur == in_d) {
                left.push_back(cur);
                right.push_back(res.right_dart[in_pos] + 1);
            } else {
                DartSides s = cls.sides(cur);
                if (s.leaves == Side::Left)
                    left.push_back(cur);
                else
                    right.push_back(cur);
            }
            cur = g.next(cur);
        } while (cur != cls.frame(i).d_next);
        for (int d : left) origin_of[d] = res.left_vertex[i];
        for (int d : right) origin_of[d] = res.right_vertex[i];
    }

    for (int d = 0; d < nd + 2 * k; ++d) {
        auto& ds = spec.darts[d];
        ds.origin = origin_of[d];
        ds.weight = g.weight(res.dart_to_base[d]);
        if (d < nd) {
            ds.twin = g.twin(d);
        } else {
            ds.twin = ((d - nd) % 2 == 0) ? d + 1 : d - 1;
        }
    }
    for (int d = 0; d < nd + 2 * k; ++d)
        spec.darts[d].head = spec.darts[spec.darts[d].twin].origin;

    EmbeddedGraph cut = EmbeddedGraph::build_relaxed(spec);

    std::set<int> marks;
    for (int f : inherited_boundary(g, cut, res.dart_to_base)) marks.insert(f);
    marks.insert(cut.face_of(res.left_dart[0]));
    marks.insert(cut.face_of(cut.twin(res.right_dart[0])));
    res.new_boundary_faces.assign(marks.begin(), marks.end());
    res.graph = cut.with_boundary_marks(res.new_boundary_faces);
    return res;
}

EmbeddedGraph paste_disk(const EmbeddedGraph& g, int boundary_face) {
    if (boundary_face < 0 || boundary_face >= g.face_count() ||
        !g.face_is_boundary(boundary_face))
        throw Error(ErrorKind::NotBoundary, "face is not a boundary face");
    std::vector<int> marks;
    for (int f : g.boundary_faces())
        if (f != boundary_face) marks.push_back(f);
    return g.with_boundary_marks(marks);
}

EmbeddedGraph paste_all_disks(const EmbeddedGraph& g) {
    return g.with_boundary_marks({});
}

EmbeddedGraph puncture_face(const EmbeddedGraph& g, int face) {
    if (face < 0 || face >= g.face_count() || g.face_is_boundary(face))
        throw Error(ErrorKind::InvalidBoundary, "face is not interior");
    std::vector<int> marks = g.boundary_faces();
    marks.push_back(face);
    return g.with_boundary_marks(marks);
}

SubgraphCutResult cut_along_subgraph(const EmbeddedGraph& g,
                                     const std::vector<int>& edge_darts) {
    const int nd = g.dart_count();
    std::vector<int> copy_index(nd, -1);  // cut dart -> index into edge list
    std::vector<char> is_cut(nd, 0);
    for (size_t i = 0; i < edge_darts.size(); ++i) {
        int d = edge_darts[i];
        if (d < 0 || d >= nd || is_cut[d])
            throw Error(ErrorKind::NotEmbeddedWalk, "bad cut edge list");
        is_cut[d] = is_cut[g.twin(d)] = 1;
        copy_index[d] = copy_index[g.twin(d)] = static_cast<int>(i);
    }

    SubgraphCutResult res;
    const int ne = static_cast<int>(edge_darts.size());
    res.left_dart.resize(ne);
    res.right_dart.resize(ne);

    // Dart ids: non-cut darts keep theirs; cut dart d maps to a left copy
    // (id d) and a right copy (appended).
    res.dart_to_base.resize(nd + 2 * ne);
    for (int d = 0; d < nd; ++d) res.dart_to_base[d] = d;
    for (int i = 0; i < ne; ++i) {
        res.left_dart[i] = edge_darts[i];
        res.right_dart[i] = nd + 2 * i;
        res.dart_to_base[nd + 2 * i] = edge_darts[i];
        res.dart_to_base[nd + 2 * i + 1] = g.twin(edge_darts[i]);
    }
    // Each cut dart has a copy attached in the sector just counterclockwise
    // of it (bordering the face on its left) and one in the sector just
    // clockwise. Ids: the ccw copy of the canonical dart and the cw copy of
    // its twin reuse the original ids and stay twins; the other two copies
    // are the appended pair.
    auto ccw_copy = [&](int d) {
        int i = copy_index[d];
        return d == edge_darts[i] ? d : nd + 2 * i + 1;
    };
    auto cw_copy = [&](int d) {
        int i = copy_index[d];
        return d == edge_darts[i] ? nd + 2 * i : d;
    };

    GraphSpec spec;
    std::vector<std::vector<int>> rotations;
    res.vertex_to_base.clear();

    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = g.darts_at(v);
        std::vector<int> cut_positions;
        for (size_t i = 0; i < rot.size(); ++i)
            if (is_cut[rot[i]]) cut_positions.push_back(static_cast<int>(i));
        if (cut_positions.empty()) {
            rotations.push_back(rot);
            res.vertex_to_base.push_back(v);
            continue;
        }
        // One sector per cut dart: from that dart (exclusive) to the next cut
        // dart (exclusive), bounded by the ccw copy of the first and the cw
        // copy of the second.
        const int deg = static_cast<int>(rot.size());
        for (size_t s = 0; s < cut_positions.size(); ++s) {
            int p0 = cut_positions[s];
            int p1 = cut_positions[(s + 1) % cut_positions.size()];
            std::vector<int> sector;
            sector.push_back(ccw_copy(rot[p0]));
            for (int q = (p0 + 1) % deg; q != p1; q = (q + 1) % deg)
                sector.push_back(rot[q]);
            sector.push_back(cw_copy(rot[p1]));
            rotations.push_back(std::move(sector));
            res.vertex_to_base.push_back(v);
        }
    }

    spec.vertex_count = static_cast<int>(rotations.size());
    spec.rotation = rotations;
    spec.darts.resize(nd + 2 * ne);
    std::vector<int> origin_of(nd + 2 * ne, -1);
    for (int v = 0; v < spec.vertex_count; ++v)
        for (int d : spec.rotation[v]) origin_of[d] = v;
    for (int d = 0; d < nd + 2 * ne; ++d) {
        auto& ds = spec.darts[d];
        ds.origin = origin_of[d];
        ds.weight = g.weight(res.dart_to_base[d]);
        ds.twin = (d < nd) ? g.twin(d) : ((d - nd) % 2 == 0 ? d + 1 : d - 1);
    }
    for (int d = 0; d < nd + 2 * ne; ++d)
        spec.darts[d].head = spec.darts[spec.darts[d].twin].origin;

    EmbeddedGraph cut = EmbeddedGraph::build_relaxed(spec);

    std::set<int> marks;
    for (int f : inherited_boundary(g, cut, res.dart_to_base)) marks.insert(f);
    for (int i = 0; i < ne; ++i) {
        marks.insert(cut.face_of(res.left_dart[i]));
        marks.insert(cut.face_of(cut.twin(res.right_dart[i])));
    }
    res.new_boundary_faces.assign(marks.begin(), marks.end());
    res.graph = cut.with_boundary_marks(res.new_boundary_faces);
    return res;
}

bool cut_round_trips(const EmbeddedGraph& base, const CycleWalk& c,
                     const CutResult& cut) {
    // Identify the copies back: every new dart maps to its base dart; the
    // reconstruction matches when, for every base dart, rotation successor and
    // weight agree with the base after projection.
    const EmbeddedGraph& h = cut.graph;
    if (h.dart_count() != base.dart_count() + 2 * c.size()) return false;
    (void)c;
    for (int d = 0; d < h.dart_count(); ++d) {
        int bd = cut.dart_to_base[d];
        if (h.weight(d) != base.weight(bd)) return false;
        if (cut.dart_to_base[h.twin(d)] != base.twin(bd)) return false;
        if (cut.vertex_to_base[h.origin(d)] != base.origin(bd)) return false;
    }
    // Rotation: walking `next` in the cut graph and projecting must reproduce
    // the base rotation with the cut darts' copies interleaved consistently:
    // around each base vertex, the projected darts of all its copies form the
    // base rotation as a cyclic sequence split into contiguous arcs.
    for (int v = 0; v < h.vertex_count(); ++v) {
        for (int d : h.darts_at(v)) {
            int nd_ = h.next(d);
            int b1 = cut.dart_to_base[d];
            int b2 = cut.dart_to_base[nd_];
            // The projected successor must be reachable from b1 by skipping
            // darts that were assigned to the sibling copy.
            int cur = base.next(b1);
            bool ok = false;
            for (int steps = 0; steps < base.degree(base.origin(b1)); ++steps) {
                if (cur == b2) {
                    ok = true;
                    break;
                }
                cur = base.next(cur);
            }
            if (!ok) return false;
        }
    }
    return true;
}

} // namespace surfcyc
