#ifndef HEXFREE_DECOMPOSITION_HPP
#define HEXFREE_DECOMPOSITION_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "hexfree/graph.hpp"

namespace hexfree {

/// Binary clique-cutset decomposition tree over host-graph vertex ids.
/// Internal nodes carry the cutset; leaves carry the vertex set of an atom
/// (a connected induced subgraph with no clique cutset).
struct AtomTree {
    struct Node {
        std::vector<int> cutset;      // empty at leaves
        std::vector<int> vertices;    // vertex set at this node (always filled)
        std::unique_ptr<Node> left, right;
        bool is_leaf() const { return !left; }
    };
    std::unique_ptr<Node> root;

    int leaf_count() const;
    std::vector<const Node*> leaves() const; // left-to-right order
};

/// A clique whose removal disconnects g, or nullopt when g is an atom.
/// Candidates come from a minimal triangulation (maximum cardinality search
/// with fill); every candidate is verified directly (clique in g, removal
/// disconnects). For n <= 24 a failed candidate scan falls back to exhaustive
/// clique enumeration, which guarantees the answer at test scale.
std::optional<std::vector<int>> find_clique_cutset(const Graph& g);

/// Decomposes a connected graph into its atom tree. Splitting detaches one
/// component of g - cutset at a time, so the leaf count stays below the host
/// vertex count. Disconnected input is an error: split components first.
AtomTree decompose(const Graph& g);

/// Glues proper per-leaf colorings (keyed by leaf order) into a proper
/// coloring of the whole graph, permuting colors at each internal node so the
/// two sides agree on the cutset. Uses max-over-leaves many colors.
Coloring recombine(const Graph& g, const AtomTree& tree,
                   const std::vector<Coloring>& leaf_colorings);

} // namespace hexfree

#endif
