#ifndef HEXFREE_COLORING_HPP
#define HEXFREE_COLORING_HPP

#include <array>
#include <string>
#include <vector>

#include "hexfree/c5_structure.hpp"
#include "hexfree/graph.hpp"
#include "hexfree/recognition.hpp"

namespace hexfree {

/// Raised by color_class_graph when the input contains a forbidden pattern.
struct NotInClass : InputError {
    Witness witness;
    explicit NotInClass(Witness w)
        : InputError("graph is outside the class: contains an induced " + to_string(w.kind)),
          witness(std::move(w)) {}
};

/// Node budget for the exact solver: HEXFREE_NODE_BUDGET, else 100M nodes.
long long default_node_budget();

struct ColorOptions {
    long long node_budget = -1; // -1 means default_node_budget()
    bool validate_structure = true;
};

/// Exact optimal coloring of an arbitrary graph: branch and bound over k
/// ascending from the exact clique lower bound, DSATUR vertex order, maximum
/// clique precolored. Throws BudgetExceeded when the node budget runs out —
/// never returns a suboptimal answer.
Coloring exact_color(const Graph& g, long long node_budget = -1);

/// Optimal coloring of a graph with stability number at most 2: a maximum
/// matching of the complement pairs up color classes of size two, so
/// chi = n - matching size. Precondition checked.
Coloring color_alpha2(const Graph& g);

/// Three cliques with per-clique color lists: the restricted list-coloring
/// setting in which a proper list coloring always exists. Conditions:
///  (a) every vertex has at most one neighbor in each other clique,
///  (b) neighbors of one vertex in the two other cliques are adjacent,
///  (c) per-clique lists with |L_i| >= |Q_i|, designated colors d_i in L_i
///      pairwise distinct, and no color common to all three lists.
struct ListInstance {
    Graph graph; // the three cliques plus their cross edges
    std::array<std::vector<int>, 3> cliques;
    std::array<std::vector<int>, 3> lists; // sorted, de-duplicated
    std::array<int, 3> designated{-1, -1, -1};
};

/// Empty when the instance satisfies the hypotheses above; otherwise a list
/// of human-readable problems.
std::vector<std::string> validate_list_instance(const ListInstance& inst);

/// Proper coloring assigning every vertex a color from its clique's list.
/// Follows the inductive argument: singleton-clique reductions, then shared
/// non-designated colors placed on nonadjacent pairs, with the residual
/// two-clique and all-pairs cases settled by bounded search. Invalid
/// instances raise InputError; valid instances always succeed.
std::vector<int> l_color_three_cliques(const ListInstance& inst);

/// A stable set meeting every maximum clique, in the regime where R is empty
/// and the non-empty X-sets sit at positions {i, i+1, i+3}: picks one vertex
/// from every non-empty X-set when a stable transversal exists, otherwise
/// from every X-set with at least two vertices. The exact drop
/// omega(g - S) = omega(g) - 1 is verified before returning.
std::vector<int> good_stable_set(const Graph& g, const C5Structure& s);

/// Optimal coloring when R and Y are empty and only X_i, X_{i+1}, X_{i+3}
/// may be non-empty. Uses max(3, max|X|+2) colors: direct constructions when
/// max|X| <= 2, otherwise peels a good stable set and recurses.
Coloring color_three_xi_case(const Graph& g, const C5Structure& s);

/// Optimal coloring when R = X_{i+2} = X_{i+4} = empty and omega >= 5.
/// omega = 5: colors the cycle 0..4 and each y_j with j-1, builds per-X color
/// lists from the absent neighbors, and finishes with l_color_three_cliques.
/// omega >= 6: peels a good stable set and recurses.
Coloring color_k_colorable_case(const Graph& g, const C5Structure& s);

/// The full pipeline for class members: per component, per atom of the
/// clique-cutset tree — alpha <= 2 by matching; no C5/C7 (perfect) by the
/// exact solver checked against omega; C7 present (at most 21 vertices) or
/// R nonempty in an atom (at most 22) or omega < 14 by the exact solver;
/// a vertex of degree <= 13 by recursion plus greedy extension; otherwise
/// exactly three big non-consecutive X-sets and the omega-coloring routine.
/// Rejects non-members with NotInClass.
Coloring color_class_graph(const Graph& g, const ColorOptions& options = {});

} // namespace hexfree

#endif
