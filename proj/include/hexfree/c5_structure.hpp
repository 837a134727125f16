#ifndef HEXFREE_C5_STRUCTURE_HPP
#define HEXFREE_C5_STRUCTURE_HPP

#include <array>
#include <string>
#include <vector>

#include "hexfree/graph.hpp"

namespace hexfree {

/// Partition of the vertices outside a fixed induced C5. Position arithmetic
/// is mod 5: X[i] holds the vertices adjacent to exactly {c5[i], c5[i+1]},
/// Y[i] those adjacent to exactly {c5[i], .., c5[i+3]}, R those with no
/// neighbor on the cycle. Any other attachment pattern is impossible inside
/// the class and makes classification fail.
struct C5Structure {
    std::vector<int> c5; // cyclic order
    std::array<std::vector<int>, 5> X;
    std::array<std::vector<int>, 5> Y;
    std::vector<int> R;

    std::vector<int> all_x() const;
    std::vector<int> all_y() const;
    /// The unique vertex of Y[i], or -1 when Y[i] is empty.
    int y(int i) const;
};

/// Same idea relative to an induced C7: only two attachment patterns can
/// occur, adjacent to {i..i+3} (Y[i]) or to {i, i+1, i+3, i+4} (Z[i]).
struct C7Structure {
    std::vector<int> c7;
    std::array<std::vector<int>, 7> Y;
    std::array<std::vector<int>, 7> Z;
};

/// Classifies every vertex outside the cycle. Throws StructureViolation
/// (carrying the vertex and its cycle neighborhood) if some vertex matches no
/// legal pattern, and InputError if `c5` is not an induced C5.
C5Structure classify_c5(const Graph& g, const std::vector<int>& c5);
C7Structure classify_c7(const Graph& g, const std::vector<int>& c7);

/// The structural facts that hold for every class member around a C5, as
/// independently checkable predicates. Violations are data, not errors.
enum class ClaimId {
    y_unique,                  // each Y[i] has at most one vertex
    consecutive_y_nonadjacent, // no edge between Y[i] and Y[i+1]
    x_joins_aligned_y,         // X[i] is complete to Y[i] and Y[i+3]
    aligned_y_pair_adjacent,   // X[i] nonempty and both y_i, y_{i+3} exist => they are adjacent
    x_avoids_misaligned_y,     // no edge between X[i] and Y[i+1], Y[i+2], Y[i+4]
    r_avoids_y,                // no edge between R and any Y vertex
    r_needs_x,                 // connected graph with R nonempty has X nonempty
    x_set_clique,              // each X[i] induces a clique
    r_clique,                  // R induces a clique
    r_joins_x,                 // R is complete to every X[i]
    r_caps_x_size,             // R nonempty => |X[i]| <= 2 for all i
    x_cross_degree_one,        // a vertex of X[i] has at most one neighbor in X[j]
    x_cross_neighbors_adjacent,// neighbors of an X[i] vertex in different X[j]s are adjacent
    small_r_or_x_cutset,       // X nonempty => |R| <= 2 or X is a clique cutset
    big_x_flattens_neighbors,  // X[i],X[i+1],X[i+2] nonempty with one of size >= 3
                               // => the other two are singletons
};

std::string to_string(ClaimId id);

struct ClaimViolation {
    ClaimId claim;
    std::vector<int> vertices; // the witnessing vertices
};

/// Checks every claim predicate against the classified structure; an empty
/// result is the executable form of the class's structural theory. The
/// connectivity-dependent check (r_needs_x) is applied only when g is
/// connected.
std::vector<ClaimViolation> validate_claims(const Graph& g, const C5Structure& s);

} // namespace hexfree

#endif
