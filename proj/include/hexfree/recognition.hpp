#ifndef HEXFREE_RECOGNITION_HPP
#define HEXFREE_RECOGNITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "hexfree/graph.hpp"

namespace hexfree {

/// The six graphs whose absence (as induced subgraphs) defines the class.
enum class ForbiddenKind { claw, four_K1, K5_minus_e, five_wheel, C5_twin, P5_twin };

constexpr ForbiddenKind all_forbidden_kinds[] = {
    ForbiddenKind::claw,       ForbiddenKind::four_K1, ForbiddenKind::K5_minus_e,
    ForbiddenKind::five_wheel, ForbiddenKind::C5_twin, ForbiddenKind::P5_twin,
};

std::string to_string(ForbiddenKind kind);

/// Vertices realizing a forbidden pattern, in the pattern's role order:
///   claw:       center, then three pairwise nonadjacent leaves
///   four_K1:    four pairwise nonadjacent vertices
///   K5_minus_e: triangle, then the one nonadjacent pair
///   five_wheel: hub, then the rim cycle in cyclic order
///   C5_twin:    cycle c0..c4 in cyclic order, then the twin of c0
///   P5_twin:    path p0..p4 in path order, then the twin of p2
struct Witness {
    ForbiddenKind kind;
    std::vector<int> vertices;
};

/// The pattern graph itself, on pattern_size(kind) vertices in role order.
Graph pattern_graph(ForbiddenKind kind);
int pattern_size(ForbiddenKind kind);

/// True iff `verts` (in role order) induce exactly the pattern in g.
bool witness_is_valid(const Graph& g, const Witness& w);

/// Finds an induced copy of the pattern, or nullopt. Deterministic scan order.
std::optional<Witness> find_forbidden(const Graph& g, ForbiddenKind kind);

/// True iff g avoids all six patterns; otherwise a witness for the first
/// violated kind (in enum order).
struct ClassCheck {
    bool in_class;
    std::optional<Witness> witness;
};
ClassCheck in_class(const Graph& g);

struct CliqueResult {
    int size = 0;
    std::vector<int> vertices;
};

/// Exact maximum clique by branch and bound with a greedy-coloring bound.
CliqueResult clique_number(const Graph& g);
/// Exact maximum stable set (clique of the complement).
CliqueResult stability_number(const Graph& g);

/// Lexicographically least vertex set inducing a chordless cycle of the given
/// length (5 or 7), returned in cyclic order starting at its least vertex; or
/// nullopt.
std::optional<std::vector<int>> find_hole(const Graph& g, int length);

/// Perfectness test valid inside the class: a connected class member with
/// stability number >= 3 is perfect iff it has no induced C5 and no induced
/// C7. (Longer holes need four pairwise nonadjacent vertices; an odd antihole
/// forces a C5 in connected claw-free graphs with a stable triple.)
/// Preconditions are checked and raise InputError.
bool is_perfect_in_class(const Graph& g);

} // namespace hexfree

#endif
