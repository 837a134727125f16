#ifndef HEXFREE_CHROMATIC_INDEX_HPP
#define HEXFREE_CHROMATIC_INDEX_HPP

#include <variant>

#include "hexfree/coloring.hpp"
#include "hexfree/graph.hpp"

namespace hexfree {

/// Proper edge coloring: incident edges get different colors. Keys follow
/// g.edges() order.
struct EdgeColoring {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> colors; // parallel to edges
    int color_count = 0;
};

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& c);

struct MatchingGate {
    bool ok;
    std::vector<std::pair<int, int>> witness; // four disjoint edges when rejected
};

/// ok iff the graph has no matching of size four.
MatchingGate matching_gate(const Graph& g);

struct ChromaticIndexOptions {
    long long node_budget = -1;
    bool check_line_graph_class = true; // assert the line graph is in the class
};

/// Optimal edge coloring of a graph with no matching of size four: colors
/// the line graph (whose stable sets are exactly the matchings, so it is in
/// the class) with the main pipeline and pulls the colors back to the edges.
/// A matching of size four raises InputError carrying a witness via
/// matching_gate; use the gate first for a soft check.
EdgeColoring chromatic_index(const Graph& g, const ChromaticIndexOptions& options = {});

int max_degree(const Graph& g);

} // namespace hexfree

#endif
