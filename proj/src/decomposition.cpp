#include "hexfree/decomposition.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace hexfree {

int AtomTree::leaf_count() const {
    return static_cast<int>(leaves().size());
}

std::vector<const AtomTree::Node*> AtomTree::leaves() const {
    std::vector<const Node*> out;
    std::vector<const Node*> stack;
    if (root)
        stack.push_back(root.get());
    while (!stack.empty()) {
        const Node* node = stack.back();
        stack.pop_back();
        if (node->is_leaf()) {
            out.push_back(node);
        } else {
            // push right first so leaves come out left-to-right
            stack.push_back(node->right.get());
            stack.push_back(node->left.get());
        }
    }
    return out;
}

namespace {

VertexSet full_set(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        s.set(v);
    return s;
}

// Maximum cardinality search with fill (MCS-M): computes a minimal
// elimination ordering and the corresponding minimal triangulation H of g.
// num[v] is the elimination position (1 = eliminated first); madj[v] is v's
// H-neighborhood among later-eliminated vertices. The madj sets are the
// candidate separators.
struct McsM {
    std::vector<int> num;                 // by vertex
    std::vector<int> order;               // order[i] = vertex with num i+1
    std::vector<VertexSet> h_adj;         // triangulated adjacency

    explicit McsM(const Graph& g) {
        int n = g.vertex_count();
        num.assign(n, 0);
        order.assign(n, -1);
        h_adj.reserve(n);
        for (int v = 0; v < n; ++v)
            h_adj.push_back(g.neighbors(v));

        std::vector<int> weight(n, 0);
        std::vector<bool> numbered(n, false);
        const int INF = 1 << 30;
        for (int i = n; i >= 1; --i) {
            int v = -1;
            for (int u = 0; u < n; ++u)
                if (!numbered[u] && (v < 0 || weight[u] > weight[v]))
                    v = u;
            if (v < 0)
                break;
            // Bottleneck search: reach[u] = the smallest possible maximum
            // weight of an internal vertex on an unnumbered v-u path. u is
            // reachable in the MCS-M sense iff reach[u] < weight[u].
            std::vector<int> reach(n, INF);
            std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>,
                                std::greater<>>
                pq;
            const VertexSet& nbv = g.neighbors(v);
            for (int u = nbv.first(); u >= 0; u = nbv.next(u))
                if (!numbered[u]) {
                    reach[u] = -1;
                    pq.emplace(-1, u);
                }
            while (!pq.empty()) {
                auto [d, x] = pq.top();
                pq.pop();
                if (d > reach[x])
                    continue;
                int through = std::max(d, weight[x]);
                const VertexSet& nbx = g.neighbors(x);
                for (int y = nbx.first(); y >= 0; y = nbx.next(y))
                    if (!numbered[y] && through < reach[y]) {
                        reach[y] = through;
                        pq.emplace(through, y);
                    }
            }
            for (int u = 0; u < n; ++u)
                if (!numbered[u] && u != v && reach[u] < weight[u]) {
                    ++weight[u];
                    if (!h_adj[v].test(u)) {
                        h_adj[v].set(u);
                        h_adj[u].set(v);
                    }
                }
            numbered[v] = true;
            num[v] = i;
            order[i - 1] = v;
        }
    }
};

bool removal_disconnects(const Graph& g, const std::vector<int>& cut) {
    VertexSet rest = full_set(g.vertex_count());
    for (int v : cut)
        rest.reset(v);
    return components_within(g, rest).size() >= 2;
}

// All minimal separators, by the close-separator closure: seed with N(C) for
// every component C of g - N[v], then expand each separator S through each of
// its vertices. Sound and complete; used as the exhaustive fallback.
std::vector<std::vector<int>> minimal_separators(const Graph& g) {
    int n = g.vertex_count();
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;

    auto neighborhood_of = [&](const std::vector<int>& comp) {
        VertexSet nb(n);
        for (int v : comp)
            nb |= g.neighbors(v);
        for (int v : comp)
            nb.reset(v);
        return nb.to_vector();
    };
    auto add = [&](std::vector<int> s) {
        if (s.empty())
            return;
        if (seen.insert(s).second)
            queue.push_back(std::move(s));
    };

    for (int v = 0; v < n; ++v) {
        VertexSet rest = full_set(n);
        rest -= g.neighbors(v);
        rest.reset(v);
        for (const auto& comp : components_within(g, rest))
            add(neighborhood_of(comp));
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        std::vector<int> s = queue[head];
        if (queue.size() > 1000000)
            throw BudgetExceeded("minimal separator enumeration exploded");
        for (int x : s) {
            VertexSet rest = full_set(n);
            for (int y : s)
                rest.reset(y);
            rest -= g.neighbors(x);
            rest.reset(x);
            for (const auto& comp : components_within(g, rest))
                add(neighborhood_of(comp));
        }
    }

    std::vector<std::vector<int>> out(seen.begin(), seen.end());
    return out;
}

} // namespace

std::optional<std::vector<int>> find_clique_cutset(const Graph& g) {
    if (!is_connected(g))
        throw InputError("find_clique_cutset: graph must be connected");
    int n = g.vertex_count();
    if (n <= 2)
        return std::nullopt;

    McsM mcs(g);
    for (int i = 0; i < n; ++i) {
        int v = mcs.order[i];
        std::vector<int> cand;
        for (int u = mcs.h_adj[v].first(); u >= 0; u = mcs.h_adj[v].next(u))
            if (mcs.num[u] > mcs.num[v])
                cand.push_back(u);
        if (cand.empty() || static_cast<int>(cand.size()) > n - 2)
            continue;
        if (is_clique(g, cand) && removal_disconnects(g, cand))
            return cand;
    }

    if (n <= 24) {
        for (const auto& s : minimal_separators(g))
            if (is_clique(g, s) && removal_disconnects(g, s))
                return s;
    }
    return std::nullopt;
}

namespace {

std::unique_ptr<AtomTree::Node> build_tree(const Graph& host, std::vector<int> verts) {
    auto node = std::make_unique<AtomTree::Node>();
    std::sort(verts.begin(), verts.end());
    node->vertices = verts;

    auto sub = induced_subgraph(host, verts);
    auto cut = find_clique_cutset(sub.graph);
    if (!cut)
        return node; // leaf: this piece is an atom

    for (int c : *cut)
        node->cutset.push_back(sub.origin[c]);
    std::sort(node->cutset.begin(), node->cutset.end());

    VertexSet rest = VertexSet::of(sub.graph.vertex_count(), {});
    for (int v = 0; v < sub.graph.vertex_count(); ++v)
        rest.set(v);
    for (int c : *cut)
        rest.reset(c);
    auto comps = components_within(sub.graph, rest);

    // Detach the first component; the cutset stays on both sides.
    std::vector<int> left, right;
    for (int c : node->cutset) {
        left.push_back(c);
        right.push_back(c);
    }
    for (int v : comps[0])
        left.push_back(sub.origin[v]);
    for (size_t k = 1; k < comps.size(); ++k)
        for (int v : comps[k])
            right.push_back(sub.origin[v]);

    node->left = build_tree(host, std::move(left));
    node->right = build_tree(host, std::move(right));
    return node;
}

} // namespace

AtomTree decompose(const Graph& g) {
    if (!is_connected(g))
        throw InputError("decompose: graph must be connected; split components first");
    AtomTree tree;
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        all[v] = v;
    tree.root = build_tree(g, std::move(all));
    return tree;
}

namespace {

// Renames colors to 0..k-1 in order of first appearance.
Coloring normalize(const Coloring& c) {
    std::vector<int> remap;
    Coloring out;
    out.colors.reserve(c.colors.size());
    for (int x : c.colors) {
        auto it = std::find(remap.begin(), remap.end(), x);
        if (it == remap.end()) {
            remap.push_back(x);
            out.colors.push_back(static_cast<int>(remap.size()) - 1);
        } else {
            out.colors.push_back(static_cast<int>(it - remap.begin()));
        }
    }
    out.color_count = static_cast<int>(remap.size());
    return out;
}

struct PartialColoring {
    std::vector<int> color; // host-indexed, -1 outside the node
    int count = 0;
};

PartialColoring merge_tree(const Graph& host, const AtomTree::Node* node,
                           const std::vector<Coloring>& leaf_colorings, size_t& next_leaf) {
    int n = host.vertex_count();
    if (node->is_leaf()) {
        if (next_leaf >= leaf_colorings.size())
            throw InputError("recombine: fewer colorings than leaves");
        Coloring c = normalize(leaf_colorings[next_leaf++]);
        if (c.colors.size() != node->vertices.size())
            throw InputError("recombine: leaf coloring has wrong size");
        auto sub = induced_subgraph(host, node->vertices);
        if (!is_proper(sub.graph, c))
            throw InputError("recombine: leaf coloring is not proper on its atom");
        PartialColoring out;
        out.color.assign(n, -1);
        for (size_t i = 0; i < node->vertices.size(); ++i)
            out.color[node->vertices[i]] = c.colors[i];
        out.count = c.color_count;
        return out;
    }

    PartialColoring left = merge_tree(host, node->left.get(), leaf_colorings, next_leaf);
    PartialColoring right = merge_tree(host, node->right.get(), leaf_colorings, next_leaf);

    int total = std::max(left.count, right.count);
    std::vector<int> perm(right.count, -1);
    std::vector<bool> taken(total, false);
    for (int v : node->cutset) {
        int cl = left.color[v], cr = right.color[v];
        if (perm[cr] != -1 && perm[cr] != cl)
            throw StructureViolation("recombine: cutset colors inconsistent");
        perm[cr] = cl;
        taken[cl] = true;
    }
    for (int c = 0; c < right.count; ++c) {
        if (perm[c] != -1)
            continue;
        int t = 0;
        while (taken[t])
            ++t;
        perm[c] = t;
        taken[t] = true;
    }

    PartialColoring out;
    out.color = left.color;
    for (int v : node->right->vertices)
        out.color[v] = perm[right.color[v]];
    out.count = total;
    return out;
}

} // namespace

Coloring recombine(const Graph& g, const AtomTree& tree, const std::vector<Coloring>& leaf_colorings) {
    size_t next_leaf = 0;
    PartialColoring merged = merge_tree(g, tree.root.get(), leaf_colorings, next_leaf);
    if (next_leaf != leaf_colorings.size())
        throw InputError("recombine: more colorings than leaves");
    Coloring out = make_coloring(merged.color);
    if (!is_proper(g, out))
        throw StructureViolation("recombine: merged coloring is not proper");
    if (out.color_count != merged.count)
        throw StructureViolation("recombine: color count mismatch after merge");
    return out;
}

} // namespace hexfree
