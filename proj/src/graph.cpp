#include "hexfree/graph.hpp"

#include <algorithm>
#include <bit>

namespace hexfree {

int VertexSet::count() const {
    int c = 0;
    for (uint64_t w : w_)
        c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (uint64_t w : w_)
        if (w)
            return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i])
            return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i])
            return false;
    return true;
}

int VertexSet::first() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i])
            return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

int VertexSet::next(int after) const {
    int start = after + 1;
    if (start >= n_)
        return -1;
    size_t i = start >> 6;
    uint64_t w = w_[i] & (~uint64_t(0) << (start & 63));
    while (true) {
        if (w)
            return static_cast<int>(i * 64 + std::countr_zero(w));
        if (++i >= w_.size())
            return -1;
        w = w_[i];
    }
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i)
        w_[i] &= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i)
        w_[i] |= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i)
        w_[i] &= ~o.w_[i];
    return *this;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v))
        out.push_back(v);
    return out;
}

VertexSet VertexSet::of(int universe, const std::vector<int>& elems) {
    VertexSet s(universe);
    for (int v : elems)
        s.set(v);
    return s;
}

Graph::Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
    if (n < 0)
        throw InputError("negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
    for (auto [u, v] : edge_list)
        add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InputError("vertex index " + std::to_string(v) + " out of range [0," +
                         std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw InputError("loop at vertex " + std::to_string(u));
    if (adj_[u].test(v))
        return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

const std::string& Graph::label(int v) const {
    static const std::string empty;
    check_vertex(v);
    if (labels_.empty())
        return empty;
    return labels_[v];
}

void Graph::set_label(int v, std::string s) {
    check_vertex(v);
    if (labels_.empty())
        labels_.resize(n_);
    labels_[v] = std::move(s);
}

Coloring make_coloring(std::vector<int> colors) {
    Coloring c;
    c.colors = std::move(colors);
    std::vector<int> seen;
    for (int x : c.colors) {
        if (x < 0)
            throw InputError("negative color");
        if (std::find(seen.begin(), seen.end(), x) == seen.end())
            seen.push_back(x);
    }
    c.color_count = static_cast<int>(seen.size());
    return c;
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count())
        return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.colors[v] < 0)
            return false;
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v])
            return false;
    return true;
}

bool is_matching(const Graph& g, const Matching& m) {
    VertexSet used(g.vertex_count());
    for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
            return false;
        if (!g.adjacent(u, v))
            return false;
        if (used.test(u) || used.test(v))
            return false;
        used.set(u);
        used.set(v);
    }
    return true;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph co(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                co.add_edge(u, v);
    for (int v = 0; v < n; ++v)
        if (g.has_labels())
            co.set_label(v, g.label(v));
    return co;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= g.vertex_count())
            throw InputError("induced_subgraph: vertex out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw InputError("induced_subgraph: duplicate vertex");
    }
    InducedSubgraph out;
    out.graph = Graph(static_cast<int>(sorted.size()));
    out.origin = sorted;
    for (size_t i = 0; i < sorted.size(); ++i)
        for (size_t j = i + 1; j < sorted.size(); ++j)
            if (g.adjacent(sorted[i], sorted[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (g.has_labels())
        for (size_t i = 0; i < sorted.size(); ++i)
            out.graph.set_label(static_cast<int>(i), g.label(sorted[i]));
    return out;
}

SetRelation join_cojoin(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
    VertexSet xset = VertexSet::of(g.vertex_count(), xs);
    for (int y : ys)
        if (xset.test(y))
            throw InputError("join_cojoin: sets overlap");
    if (xs.empty() || ys.empty())
        return SetRelation::cojoin;
    bool all = true, none = true;
    for (int x : xs)
        for (int y : ys) {
            if (g.adjacent(x, y))
                none = false;
            else
                all = false;
        }
    if (all)
        return SetRelation::join;
    if (none)
        return SetRelation::cojoin;
    return SetRelation::mixed;
}

LineGraphResult line_graph(const Graph& g) {
    LineGraphResult out;
    out.edge_of_vertex = g.edges();
    int k = static_cast<int>(out.edge_of_vertex.size());
    out.graph = Graph(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            auto [a, b] = out.edge_of_vertex[i];
            auto [c, d] = out.edge_of_vertex[j];
            if (a == c || a == d || b == c || b == d)
                out.graph.add_edge(i, j);
        }
    return out;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j]))
                return false;
    return true;
}

bool is_stable_set(const Graph& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j]))
                return false;
    return true;
}

std::vector<std::vector<int>> components_within(const Graph& g, const VertexSet& within) {
    std::vector<std::vector<int>> comps;
    VertexSet todo = within;
    while (true) {
        int root = todo.first();
        if (root < 0)
            break;
        std::vector<int> comp;
        std::vector<int> stack{root};
        todo.reset(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            VertexSet nb = g.neighbors(v);
            nb &= todo;
            for (int u = nb.first(); u >= 0; u = nb.next(u)) {
                todo.reset(u);
                stack.push_back(u);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    VertexSet all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        all.set(v);
    return components_within(g, all);
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1)
        return true;
    return connected_components(g).size() == 1;
}

} // namespace hexfree
