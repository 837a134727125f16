#include "hexfree/chromatic_index.hpp"

#include <algorithm>

#include "hexfree/matching.hpp"
#include "hexfree/recognition.hpp"

namespace hexfree {

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& c) {
    if (c.edges.size() != c.colors.size())
        return false;
    if (c.edges != g.edges())
        return false;
    for (size_t i = 0; i < c.edges.size(); ++i)
        for (size_t j = i + 1; j < c.edges.size(); ++j) {
            auto [a, b] = c.edges[i];
            auto [x, y] = c.edges[j];
            bool incident = (a == x || a == y || b == x || b == y);
            if (incident && c.colors[i] == c.colors[j])
                return false;
        }
    return true;
}

MatchingGate matching_gate(const Graph& g) {
    Matching m = max_matching(g);
    if (m.size() <= 3)
        return MatchingGate{true, {}};
    MatchingGate gate{false, {}};
    gate.witness.assign(m.edges.begin(), m.edges.begin() + 4);
    return gate;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        d = std::max(d, g.degree(v));
    return d;
}

EdgeColoring chromatic_index(const Graph& g, const ChromaticIndexOptions& options) {
    MatchingGate gate = matching_gate(g);
    if (!gate.ok) {
        std::string msg = "graph has a matching of size four:";
        for (auto [u, v] : gate.witness)
            msg += " (" + std::to_string(u) + "," + std::to_string(v) + ")";
        throw InputError(msg);
    }

    LineGraphResult lg = line_graph(g);
    if (options.check_line_graph_class) {
        ClassCheck check = in_class(lg.graph);
        if (!check.in_class)
            throw StructureViolation(
                "line graph of a nu<=3 graph left the class: contains an induced " +
                to_string(check.witness->kind));
    }

    ColorOptions copts;
    copts.node_budget = options.node_budget;
    Coloring vertex_colors = color_class_graph(lg.graph, copts);

    EdgeColoring out;
    out.edges = lg.edge_of_vertex;
    out.colors = vertex_colors.colors;
    out.color_count = vertex_colors.color_count;
    if (!is_proper_edge_coloring(g, out))
        throw StructureViolation("pulled-back edge coloring is not proper");
    int delta = max_degree(g);
    if (out.color_count < delta || out.color_count > delta + 1)
        throw StructureViolation("edge coloring misses the degree sandwich");
    return out;
}

} // namespace hexfree
