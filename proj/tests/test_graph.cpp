#include <doctest.h>

#include "fixtures.hpp"
#include "hexfree/graph.hpp"
#include "hexfree/io.hpp"

using namespace hexfree;
using namespace hexfree::testing;

TEST_CASE("complement basics") {
    // K4 and the empty graph swap
    Graph k4 = complete(4);
    Graph co = complement(k4);
    CHECK(co.edge_count() == 0);
    CHECK(complement(co).edge_count() == 6);

    // C5 is self-complementary: same degree sequence and a 5-cycle again
    Graph c5 = cycle(5);
    Graph coc5 = complement(c5);
    CHECK(coc5.edge_count() == 5);
    for (int v = 0; v < 5; ++v)
        CHECK(coc5.degree(v) == 2);
    CHECK(is_connected(coc5));

    Graph empty(0);
    CHECK(complement(empty).vertex_count() == 0);
}

TEST_CASE("complement is an involution on random graphs") {
    Rng rng(42);
    for (int round = 0; round < 50; ++round) {
        int n = rng.below(9);
        Graph g = random_graph(n, 0.5, rng);
        Graph back = complement(complement(g));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                CHECK(back.adjacent(u, v) == g.adjacent(u, v));
    }
}

TEST_CASE("induced subgraph") {
    Graph c5 = cycle(5);
    auto p3 = induced_subgraph(c5, {0, 1, 2});
    CHECK(p3.graph.vertex_count() == 3);
    CHECK(p3.graph.edge_count() == 2);

    auto nothing = induced_subgraph(c5, {});
    CHECK(nothing.graph.vertex_count() == 0);

    auto k4 = induced_subgraph(complete(5), {0, 2, 3, 4});
    CHECK(k4.graph.edge_count() == 6);
    CHECK(k4.origin == std::vector<int>{0, 2, 3, 4});

    CHECK_THROWS_AS(induced_subgraph(c5, {0, 7}), InputError);
    CHECK_THROWS_AS(induced_subgraph(c5, {1, 1}), InputError);

    // identity case
    auto whole = induced_subgraph(c5, {0, 1, 2, 3, 4});
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            CHECK(whole.graph.adjacent(u, v) == c5.adjacent(u, v));
}

TEST_CASE("join_cojoin") {
    CHECK(join_cojoin(complete(4), {0, 1}, {2, 3}) == SetRelation::join);
    CHECK(join_cojoin(cycle(5), {0}, {2, 3}) == SetRelation::cojoin);
    CHECK(join_cojoin(cycle(5), {0}, {1, 2}) == SetRelation::mixed);
    // empty side: cojoin by convention
    CHECK(join_cojoin(cycle(5), {}, {1, 2}) == SetRelation::cojoin);
    CHECK_THROWS_AS(join_cojoin(cycle(5), {0, 1}, {1, 2}), InputError);
}

TEST_CASE("line graph") {
    // K_{1,3} -> K3
    auto lg = line_graph(star(3));
    CHECK(lg.graph.vertex_count() == 3);
    CHECK(lg.graph.edge_count() == 3);

    // P4 -> P3
    auto lp = line_graph(path(4));
    CHECK(lp.graph.vertex_count() == 3);
    CHECK(lp.graph.edge_count() == 2);

    // C5 -> C5
    auto lc = line_graph(cycle(5));
    CHECK(lc.graph.vertex_count() == 5);
    CHECK(lc.graph.edge_count() == 5);
    for (int v = 0; v < 5; ++v)
        CHECK(lc.graph.degree(v) == 2);

    CHECK(line_graph(Graph(3)).graph.vertex_count() == 0);
}

TEST_CASE("loops rejected, duplicates deduped") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("dimacs round trip") {
    std::string text = "c sample\np edge 3 2\ne 1 2\ne 2 3\n";
    Graph g = read_graph(text, GraphFormat::dimacs);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK(!g.adjacent(0, 2));

    std::string out = write_graph(g, GraphFormat::dimacs);
    Graph back = read_graph(out, GraphFormat::dimacs);
    CHECK(back.vertex_count() == g.vertex_count());
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            CHECK(back.adjacent(u, v) == g.adjacent(u, v));
}

TEST_CASE("dimacs errors and warnings") {
    CHECK_THROWS_AS(read_graph("e 1 2\n", GraphFormat::dimacs), InputError);
    CHECK_THROWS_AS(read_graph("p edge 2 1\ne 1 1\n", GraphFormat::dimacs), InputError);
    CHECK_THROWS_AS(read_graph("p edge 2 1\ne 1 3\n", GraphFormat::dimacs), InputError);
    CHECK_THROWS_AS(read_graph("p fish 2 1\n", GraphFormat::dimacs), InputError);

    std::vector<std::string> warnings;
    Graph g = read_graph("p edge 2 1\ne 1 2\ne 2 1\n", GraphFormat::dimacs, &warnings);
    CHECK(g.edge_count() == 1);
    CHECK(warnings.size() == 1);

    // empty edge set with declared vertices
    Graph e4 = read_graph("p edge 4 0\n", GraphFormat::dimacs);
    CHECK(e4.vertex_count() == 4);
    CHECK(e4.edge_count() == 0);
}

TEST_CASE("edgelist format") {
    std::string text = "4  # vertices\n0 1\n2 3  # another\n";
    Graph g = read_graph(text, GraphFormat::edgelist);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(read_graph("3\n1 1\n", GraphFormat::edgelist), InputError);
    CHECK_THROWS_AS(read_graph("3\n0 5\n", GraphFormat::edgelist), InputError);

    std::string out = write_graph(g, GraphFormat::edgelist);
    Graph back = read_graph(out, GraphFormat::edgelist);
    CHECK(back.edge_count() == 2);
}

TEST_CASE("format detection") {
    CHECK(detect_format("c x\np edge 2 1\ne 1 2\n") == GraphFormat::dimacs);
    CHECK(detect_format("# comment\n3\n0 1\n") == GraphFormat::edgelist);
}

TEST_CASE("random io round trips") {
    Rng rng(7);
    for (int round = 0; round < 40; ++round) {
        int n = 1 + rng.below(10);
        Graph g = random_graph(n, 0.4, rng);
        for (GraphFormat f : {GraphFormat::dimacs, GraphFormat::edgelist}) {
            Graph back = read_graph(write_graph(g, f), f);
            REQUIRE(back.vertex_count() == n);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    CHECK(back.adjacent(u, v) == g.adjacent(u, v));
        }
    }
}

TEST_CASE("coloring helpers") {
    Graph c5 = cycle(5);
    Coloring good = make_coloring({0, 1, 0, 1, 2});
    CHECK(good.color_count == 3);
    CHECK(is_proper(c5, good));
    Coloring bad = make_coloring({0, 0, 1, 0, 1});
    CHECK(!is_proper(c5, bad));
    CHECK(!is_proper(c5, make_coloring({0, 1})));
}

TEST_CASE("components") {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3, 4});
    CHECK(comps[2] == std::vector<int>{5});
    CHECK(!is_connected(g));
    CHECK(is_connected(cycle(4)));
    CHECK(is_connected(Graph(1)));
    CHECK(is_connected(Graph(0)));
}
