#include <doctest.h>

#include "fixtures.hpp"
#include "hexfree/decomposition.hpp"
#include "hexfree/oracle.hpp"
#include "hexfree/recognition.hpp"

using namespace hexfree;
using namespace hexfree::testing;

namespace {

bool subset_disconnects(const Graph& g, const std::vector<int>& cut) {
    VertexSet rest(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        rest.set(v);
    for (int v : cut)
        rest.reset(v);
    return components_within(g, rest).size() >= 2;
}

// Reference: scan every vertex subset for a clique whose removal disconnects.
bool has_clique_cutset_brute(const Graph& g) {
    int n = g.vertex_count();
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1)
                s.push_back(v);
        if (static_cast<int>(s.size()) > n - 2)
            continue;
        if (is_clique(g, s) && subset_disconnects(g, s))
            return true;
    }
    return false;
}

Graph two_triangles_shared_edge() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return g;
}

void check_tree_invariants(const Graph& g, const AtomTree& tree) {
    // walk the tree: every internal cutset is a clique separating its node,
    // every leaf is connected with no clique cutset (brute-checked)
    std::vector<const AtomTree::Node*> stack{tree.root.get()};
    while (!stack.empty()) {
        const auto* node = stack.back();
        stack.pop_back();
        auto sub = induced_subgraph(g, node->vertices);
        REQUIRE(is_connected(sub.graph));
        if (node->is_leaf()) {
            REQUIRE(!has_clique_cutset_brute(sub.graph));
            continue;
        }
        REQUIRE(is_clique(g, node->cutset));
        // the cutset separates left-minus-cutset from right-minus-cutset
        VertexSet cut = VertexSet::of(g.vertex_count(), node->cutset);
        for (int u : node->left->vertices) {
            if (cut.test(u))
                continue;
            for (int v : node->right->vertices) {
                if (cut.test(v))
                    continue;
                REQUIRE(!g.adjacent(u, v));
                REQUIRE(u != v);
            }
        }
        stack.push_back(node->left.get());
        stack.push_back(node->right.get());
    }
}

} // namespace

TEST_CASE("clique cutsets of named graphs") {
    auto p3 = find_clique_cutset(path(3));
    REQUIRE(p3.has_value());
    CHECK(*p3 == std::vector<int>{1});

    CHECK(!find_clique_cutset(complete(4)).has_value());
    CHECK(!find_clique_cutset(cycle(5)).has_value());
    CHECK(!find_clique_cutset(cycle(6)).has_value());

    // C5 plus a vertex joined to two adjacent cycle vertices: removing that
    // pair leaves the rest connected, so no clique cutset anywhere
    Graph g = cycle(5);
    Graph h(6);
    for (auto [u, v] : g.edges())
        h.add_edge(u, v);
    h.add_edge(5, 0);
    h.add_edge(5, 1);
    CHECK(!has_clique_cutset_brute(h));
    CHECK(!find_clique_cutset(h).has_value());

    CHECK_THROWS_AS(find_clique_cutset(Graph(3)), InputError); // disconnected
}

TEST_CASE("decompose named graphs") {
    AtomTree t = decompose(path(3));
    CHECK(t.leaf_count() == 2);
    CHECK(t.root->cutset == std::vector<int>{1});

    AtomTree c5 = decompose(cycle(5));
    CHECK(c5.leaf_count() == 1);
    CHECK(c5.root->is_leaf());

    AtomTree tt = decompose(two_triangles_shared_edge());
    CHECK(tt.leaf_count() == 2);
    CHECK(tt.root->cutset == std::vector<int>{1, 2});

    CHECK_THROWS_AS(decompose(Graph(2)), InputError);

    // star: n-1 atoms, the spec bound is tight here
    AtomTree st = decompose(star(6));
    CHECK(st.leaf_count() == 6);
}

TEST_CASE("cutset detection agrees with the subset scan") {
    // exhaustive over all connected graphs on up to 6 vertices
    for (int n = 2; n <= 6; ++n) {
        uint64_t total = uint64_t(1) << (n * (n - 1) / 2);
        for (uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (!is_connected(g))
                continue;
            auto cut = find_clique_cutset(g);
            bool expect = has_clique_cutset_brute(g);
            REQUIRE(cut.has_value() == expect);
            if (cut) {
                REQUIRE(is_clique(g, *cut));
                REQUIRE(subset_disconnects(g, *cut));
            }
        }
    }
}

TEST_CASE("cutset detection agrees with the subset scan on random graphs") {
    Rng rng(2024);
    for (int round = 0; round < 400; ++round) {
        int n = 7 + rng.below(4);
        Graph g = random_graph(n, 0.25 + 0.1 * rng.below(5), rng);
        if (!is_connected(g))
            continue;
        auto cut = find_clique_cutset(g);
        REQUIRE(cut.has_value() == has_clique_cutset_brute(g));
    }
}

TEST_CASE("atom trees on random connected graphs") {
    Rng rng(909);
    int done = 0;
    while (done < 250) {
        int n = 2 + rng.below(9);
        Graph g = random_graph(n, 0.3 + 0.1 * rng.below(5), rng);
        if (!is_connected(g))
            continue;
        ++done;
        AtomTree tree = decompose(g);
        CHECK(tree.leaf_count() <= std::max(1, n - 1));
        check_tree_invariants(g, tree);

        // coloring each atom optimally and recombining is optimal overall
        std::vector<Coloring> atom_colorings;
        int max_atom = 0;
        for (const auto* leaf : tree.leaves()) {
            auto sub = induced_subgraph(g, leaf->vertices);
            int chi = brute_chromatic(sub.graph);
            // simple exhaustive coloring for the atom
            Coloring c;
            for (int k = chi;; ++k) {
                bool ok = false;
                std::vector<int> col(sub.graph.vertex_count(), -1);
                auto rec = [&](auto&& self, int v) -> bool {
                    if (v == sub.graph.vertex_count())
                        return true;
                    for (int cc = 0; cc < k; ++cc) {
                        bool fits = true;
                        for (int u = 0; u < v; ++u)
                            if (col[u] == cc && sub.graph.adjacent(u, v))
                                fits = false;
                        if (!fits)
                            continue;
                        col[v] = cc;
                        if (self(self, v + 1))
                            return true;
                        col[v] = -1;
                    }
                    return false;
                };
                ok = rec(rec, 0);
                if (ok) {
                    c = make_coloring(col);
                    break;
                }
            }
            max_atom = std::max(max_atom, c.color_count);
            atom_colorings.push_back(c);
        }
        Coloring whole = recombine(g, tree, atom_colorings);
        REQUIRE(is_proper(g, whole));
        CHECK(whole.color_count == max_atom);
        CHECK(whole.color_count == brute_chromatic(g));
    }
}

TEST_CASE("recombine rejects improper atom colorings") {
    Graph g = two_triangles_shared_edge();
    AtomTree tree = decompose(g);
    REQUIRE(tree.leaf_count() == 2);
    std::vector<Coloring> bad{make_coloring({0, 0, 1}), make_coloring({0, 1, 2})};
    CHECK_THROWS_AS(recombine(g, tree, bad), InputError);

    std::vector<Coloring> good{make_coloring({0, 1, 2}), make_coloring({2, 0, 1})};
    Coloring merged = recombine(g, tree, good);
    CHECK(merged.color_count == 3);
    CHECK(is_proper(g, merged));
}

TEST_CASE("recombine is a passthrough for single-leaf trees") {
    Graph g = cycle(5);
    AtomTree tree = decompose(g);
    Coloring c = make_coloring({0, 1, 0, 1, 2});
    Coloring merged = recombine(g, tree, {c});
    CHECK(merged.color_count == 3);
    CHECK(is_proper(g, merged));
}
