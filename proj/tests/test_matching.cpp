#include <doctest.h>

#include "fixtures.hpp"
#include "hexfree/matching.hpp"
#include "hexfree/oracle.hpp"

using namespace hexfree;
using namespace hexfree::testing;

TEST_CASE("matching on small named graphs") {
    CHECK(max_matching(cycle(5)).size() == 2);
    CHECK(max_matching(complete(4)).size() == 2);
    CHECK(max_matching(star(5)).size() == 1);
    CHECK(max_matching(Graph(4)).size() == 0);

    // the matching returned is an actual matching
    Matching m = max_matching(petersen());
    CHECK(is_matching(petersen(), m));
}

TEST_CASE("petersen has a perfect matching") {
    // frozen from the edge-subset oracle at n=10
    Graph p = petersen();
    CHECK(brute_max_matching(p) == 5);
    CHECK(max_matching(p).size() == 5);
}

TEST_CASE("blossom handling: odd components forcing contraction") {
    // two triangles joined by a path of length 3: nu = 3
    Graph g(8);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    g.add_edge(7, 5);
    CHECK(max_matching(g).size() == brute_max_matching(g));
}

TEST_CASE("matching equals brute force on random graphs up to 8 vertices") {
    Rng rng(101);
    int rounds = 0;
    while (rounds < 1200) {
        int n = rng.below(9);
        Graph g = random_graph(n, 0.15 + 0.1 * rng.below(7), rng);
        if (g.edge_count() > 20)
            continue;
        ++rounds;
        Matching m = max_matching(g);
        REQUIRE(is_matching(g, m));
        REQUIRE(m.size() == brute_max_matching(g));
    }
}
