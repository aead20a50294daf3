#ifndef SURFCYC_SIDES_HPP
#define SURFCYC_SIDES_HPP

#include <cstdint>
#include <optional>

#include "surfcyc/walk.hpp"

namespace surfcyc {

enum class Side : std::uint8_t { Left, Right };

enum class SideClass : std::uint8_t {
    EntersLeft,
    EntersRight,
    LeavesLeft,
    LeavesRight,
    Along,
    Unrelated,
};

/// Full incidence record of a dart against a simple cycle or arc. A dart with
/// both endpoints on the walk but whose edge is off the walk both leaves and
/// enters; its crossing contribution is the sum of the two parts.
struct DartSides {
    std::optional<Side> enters;
    std::optional<Side> leaves;
    bool along = false;

    int crossing_contribution() const {
        if (along) return 0;
        int c = 0;
        if (enters == Side::Left) c += 1;
        if (leaves == Side::Left) c -= 1;
        return c;
    }
    int parity_bit() const {
        if (along) return 0;
        return ((enters == Side::Left) ? 1 : 0) ^ ((leaves == Side::Left) ? 1 : 0);
    }
};

/// Precomputes the side of every dart relative to a simple directed cycle or
/// arc. For arcs, the endpoint conventions use the two boundary edges at each
/// endpoint: the boundary neighbors t, w are labeled so that (t, v1, w) read
/// clockwise, t->v0 enters from the left, w->v0 from the right, and t acts as
/// the virtual previous vertex for every other edge at the endpoint.
class SideClassifier {
public:
    SideClassifier(const EmbeddedGraph& g, const CycleWalk& p);

    const CycleWalk& walk() const { return walk_; }
    bool vertex_on_walk(int v) const { return pos_[v] >= 0; }
    int position(int v) const { return pos_[v]; }

    DartSides sides(int d) const;
    int crossing_contribution(int d) const { return sides(d).crossing_contribution(); }
    int parity_bit(int d) const { return sides(d).parity_bit(); }

    long long crossing_count_of(const CycleWalk& p) const;
    int crossing_parity_of(const CycleWalk& p) const;

    /// The dart toward the next walk vertex and toward the previous one, per
    /// walk position. At arc endpoints these are the virtual boundary darts.
    struct Frame {
        int d_next;
        int d_prev;
    };
    const Frame& frame(int position) const { return frames_[position]; }

private:
    const EmbeddedGraph* g_;
    CycleWalk walk_;
    std::vector<int> pos_;
    std::vector<char> along_;
    std::vector<std::int8_t> leave_;  // -1 none, 0 left, 1 right
    std::vector<Frame> frames_;
};

/// Classification of a single dart against a simple cycle or arc. Chord darts
/// (both endpoints on p, edge off p) report their entering side; use
/// SideClassifier::sides for the full record.
SideClass edge_side(const EmbeddedGraph& g, const CycleWalk& p, int d);

} // namespace surfcyc

#endif
