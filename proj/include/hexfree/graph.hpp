#ifndef HEXFREE_GRAPH_HPP
#define HEXFREE_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hexfree/errors.hpp"

namespace hexfree {

/// Fixed-universe set of vertex indices backed by 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { w_[v >> 6] |= uint64_t(1) << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }

    int count() const;
    bool empty() const;
    bool intersects(const VertexSet& o) const;
    bool is_subset_of(const VertexSet& o) const;

    /// Smallest element, or -1.
    int first() const;
    /// Smallest element greater than `after`, or -1.
    int next(int after) const;

    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator|=(const VertexSet& o);
    /// Removes every element of `o`.
    VertexSet& operator-=(const VertexSet& o);

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.w_ == b.w_; }

    std::vector<int> to_vector() const;
    static VertexSet of(int universe, const std::vector<int>& elems);

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

/// Simple undirected graph on vertices 0..n-1. Adjacency is stored as one
/// bitset row per vertex, so adjacency tests are O(1) and neighborhood
/// intersections run a word at a time. Loops are rejected; adding an edge
/// twice is a no-op. Intended use is build-then-read: all algorithms take
/// the graph by const reference and never mutate it.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    void add_edge(int u, int v);

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    /// All edges as (u, v) with u < v, lexicographically ordered.
    std::vector<std::pair<int, int>> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;
    void set_label(int v, std::string s);

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_; // empty unless labels were set
};

/// Proper vertex coloring candidate: colors[v] is a 0-based color index.
struct Coloring {
    std::vector<int> colors;
    int color_count = 0;
};

/// Builds a Coloring and computes color_count as the number of distinct values.
Coloring make_coloring(std::vector<int> colors);

/// True iff every edge is bichromatic and every vertex has a color >= 0.
bool is_proper(const Graph& g, const Coloring& c);

/// Set of pairwise non-incident edges of some host graph.
struct Matching {
    std::vector<std::pair<int, int>> edges;
    int size() const { return static_cast<int>(edges.size()); }
};

bool is_matching(const Graph& g, const Matching& m);

// --- elementary operations -------------------------------------------------

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> origin; // origin[i] = vertex of the host graph
};

/// Subgraph induced by `vs` (duplicates and out-of-range are input errors).
/// Vertices are relabeled 0..|vs|-1 in ascending order of the originals.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vs);

enum class SetRelation { join, cojoin, mixed };

/// Classifies the edges between two disjoint vertex sets: `join` when all
/// pairs are adjacent, `cojoin` when none are. If either side is empty both
/// hold vacuously; the convention here is to report `cojoin`.
SetRelation join_cojoin(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys);

struct LineGraphResult {
    Graph graph;                                 // one vertex per edge of the source
    std::vector<std::pair<int, int>> edge_of_vertex; // source edge represented by each vertex
};

/// Line graph: vertices are the edges of g, adjacent iff the edges share an
/// endpoint. An edgeless g yields the 0-vertex graph.
LineGraphResult line_graph(const Graph& g);

bool is_clique(const Graph& g, const std::vector<int>& vs);
bool is_stable_set(const Graph& g, const std::vector<int>& vs);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Connected components of the subgraph induced by `within`.
std::vector<std::vector<int>> components_within(const Graph& g, const VertexSet& within);

} // namespace hexfree

#endif
