#ifndef SURFCYC_ORACLE_HPP
#define SURFCYC_ORACLE_HPP

#include <optional>
#include <vector>

#include "surfcyc/walk.hpp"

namespace surfcyc {

enum class CycleClass { NonSeparating, NonContractible, NonNullHomologous };

const char* cycle_class_name(CycleClass c);

/// Every simple directed cycle of weight <= max_weight, once per rotation
/// class (walks start at their smallest vertex). Backtracking u->v->u along
/// one edge is not a cycle. Throws TooLarge past the safety cap.
std::vector<CycleWalk> enumerate_simple_cycles(const EmbeddedGraph& g,
                                               Weight max_weight,
                                               long long cap = 5'000'000);

/// Z2 edge-space membership tests against spans of face-boundary vectors.
/// Separation uses all faces (the capped surface); null-homology uses the
/// interior faces only.
class HomologyTester {
public:
    explicit HomologyTester(const EmbeddedGraph& g);
    bool null_homologous(const CycleWalk& c) const;
    bool capped_null_homologous(const CycleWalk& c) const;

private:
    std::vector<std::vector<std::uint64_t>> all_basis_, interior_basis_;
    std::vector<int> eidx_;  // dart -> edge index
    int words_;
    std::vector<std::uint64_t> edge_vector(const CycleWalk& c) const;
    const EmbeddedGraph* g_;
};

bool is_separating(const EmbeddedGraph& g, const CycleWalk& c);
bool is_null_homologous(const EmbeddedGraph& g, const CycleWalk& c);
/// Disk criterion: cutting along c leaves a component of genus zero whose
/// only boundary is the new copy of c.
bool is_contractible(const EmbeddedGraph& g, const CycleWalk& c);

/// For b >= 2: whether a simple separating cycle puts the two boundary faces
/// in different components.
bool separates_boundary_pair(const EmbeddedGraph& g, const CycleWalk& c,
                             int face_a, int face_b);

bool in_class(const EmbeddedGraph& g, const CycleWalk& c, CycleClass cls);

/// Exact minimum-weight simple cycle outside the class's triviality notion,
/// by exhaustive enumeration. Empty when the class is empty.
std::optional<CycleWalk> brute_force_shortest(const EmbeddedGraph& g,
                                              CycleClass cls);

/// Exact length of the shortest closed *walk* with nontrivial Z2 class
/// (relative class for NonNullHomologous, capped class for NonSeparating),
/// via a voltage cover over the full parity lattice. Used to confirm that
/// allowing non-simple walks never beats the simple optimum.
std::optional<Weight> shortest_nontrivial_walk_length(const EmbeddedGraph& g,
                                                      CycleClass cls);

} // namespace surfcyc

#endif
