#include <doctest.h>

#include "fixtures.hpp"
#include "hexfree/oracle.hpp"
#include "hexfree/recognition.hpp"
#include "naive_patterns.hpp"

using namespace hexfree;
using namespace hexfree::testing;

namespace {

bool is_induced_cycle(const Graph& g, const std::vector<int>& cyc) {
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j - i == 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cyc[i], cyc[j]) != consecutive)
                return false;
        }
    return true;
}

} // namespace

TEST_CASE("pattern graphs have the right shape") {
    CHECK(pattern_graph(ForbiddenKind::claw).edge_count() == 3);
    CHECK(pattern_graph(ForbiddenKind::four_K1).edge_count() == 0);
    CHECK(pattern_graph(ForbiddenKind::K5_minus_e).edge_count() == 9);
    CHECK(pattern_graph(ForbiddenKind::five_wheel).edge_count() == 10);
    CHECK(pattern_graph(ForbiddenKind::C5_twin).edge_count() == 8);
    CHECK(pattern_graph(ForbiddenKind::P5_twin).edge_count() == 7);
    // every pattern graph contains itself
    for (ForbiddenKind kind : all_forbidden_kinds) {
        auto w = find_forbidden(pattern_graph(kind), kind);
        REQUIRE(w.has_value());
        CHECK(witness_is_valid(pattern_graph(kind), *w));
    }
}

TEST_CASE("named examples") {
    auto w = find_forbidden(star(3), ForbiddenKind::claw);
    REQUIRE(w.has_value());
    CHECK(w->vertices[0] == 0); // the center

    // C8 contains 4K1 on alternate vertices
    auto f = find_forbidden(cycle(8), ForbiddenKind::four_K1);
    REQUIRE(f.has_value());
    CHECK(witness_is_valid(cycle(8), *f));

    // every 5-subset of K5 induces K5, not K5-e
    CHECK(!find_forbidden(complete(5), ForbiddenKind::K5_minus_e).has_value());

    Graph k5e = pattern_graph(ForbiddenKind::K5_minus_e);
    CHECK(find_forbidden(k5e, ForbiddenKind::K5_minus_e).has_value());
}

TEST_CASE("in_class on fixtures") {
    auto cop = in_class(co_petersen());
    CHECK(cop.in_class);

    auto claw = in_class(star(3));
    CHECK(!claw.in_class);
    REQUIRE(claw.witness.has_value());
    CHECK(claw.witness->kind == ForbiddenKind::claw);

    CHECK(in_class(complete(6)).in_class);
    CHECK(in_class(Graph(0)).in_class);
    CHECK(in_class(Graph(3)).in_class);   // 3K1 is fine, 4K1 is not
    CHECK(!in_class(Graph(4)).in_class);
}

TEST_CASE("clique and stability numbers") {
    auto cop = clique_number(co_petersen());
    CHECK(cop.size == 4);
    CHECK(is_clique(co_petersen(), cop.vertices));

    CHECK(clique_number(cycle(5)).size == 2);
    CHECK(stability_number(cycle(5)).size == 2);
    CHECK(clique_number(complete(7)).size == 7);
    CHECK(stability_number(Graph(5)).size == 5);

    // alpha(C7) = 3, matching exhaustive enumeration
    CHECK(stability_number(cycle(7)).size == 3);
    CHECK(brute_stability_number(cycle(7)) == 3);

    auto st = stability_number(petersen());
    CHECK(st.size == 4);
    CHECK(is_stable_set(petersen(), st.vertices));
}

TEST_CASE("clique search agrees with brute force on random graphs") {
    Rng rng(33);
    for (int round = 0; round < 300; ++round) {
        int n = rng.below(10);
        Graph g = random_graph(n, 0.2 + 0.1 * rng.below(6), rng);
        CHECK(clique_number(g).size == brute_clique_number(g));
    }
}

TEST_CASE("find_hole") {
    auto h = find_hole(cycle(5), 5);
    REQUIRE(h.has_value());
    CHECK(*h == std::vector<int>{0, 1, 2, 3, 4});

    CHECK(!find_hole(complete(4), 5).has_value());
    CHECK(!find_hole(cycle(6), 5).has_value());
    CHECK(find_hole(cycle(7), 7).has_value());
    CHECK(!find_hole(cycle(7), 5).has_value());
    CHECK_THROWS_AS(find_hole(cycle(6), 6), InputError);

    // co-Petersen: the lexicographically least C5 lives on the outer five
    auto cop = find_hole(co_petersen(), 5);
    REQUIRE(cop.has_value());
    for (int v : *cop)
        CHECK(v < 5);
    CHECK(is_induced_cycle(co_petersen(), *cop));

    CHECK(!find_hole(co_petersen(), 7).has_value());
}

TEST_CASE("hole scan agrees with a 2-regular connected subset scan") {
    Rng rng(77);
    for (int round = 0; round < 200; ++round) {
        int n = 5 + rng.below(5);
        Graph g = random_graph(n, 0.35, rng);
        for (int len : {5, 7}) {
            auto fast = find_hole(g, len);
            bool found = false;
            if (n >= len) {
                std::vector<int> idx(len);
                for (int i = 0; i < len; ++i)
                    idx[i] = i;
                while (!found) {
                    auto sub = induced_subgraph(g, idx);
                    bool cyc = sub.graph.edge_count() == len && is_connected(sub.graph);
                    for (int v = 0; cyc && v < len; ++v)
                        cyc = sub.graph.degree(v) == 2;
                    if (cyc)
                        found = true;
                    int pos = len - 1;
                    while (pos >= 0 && idx[pos] == n - len + pos)
                        --pos;
                    if (pos < 0)
                        break;
                    ++idx[pos];
                    for (int t = pos + 1; t < len; ++t)
                        idx[t] = idx[t - 1] + 1;
                }
            }
            CHECK(fast.has_value() == found);
            if (fast)
                CHECK(is_induced_cycle(g, *fast));
        }
    }
}

TEST_CASE("is_perfect_in_class") {
    CHECK(is_perfect_in_class(cycle(6)));
    CHECK(!is_perfect_in_class(cycle(5)));
    // co-Petersen carries a C5, so the negative answer is available even
    // though its stability number is only 2
    CHECK(!is_perfect_in_class(co_petersen()));
    // the affirmative answer demands alpha >= 3
    CHECK_THROWS_AS(is_perfect_in_class(complete(4)), InputError);
    CHECK_THROWS_AS(is_perfect_in_class(star(3)), InputError); // not in class
    Graph two(2);
    CHECK_THROWS_AS(is_perfect_in_class(two), InputError); // disconnected
}

TEST_CASE("detectors match the subset-isomorphism oracle exhaustively up to 6") {
    std::vector<PatternOrbit> orbits;
    for (ForbiddenKind kind : all_forbidden_kinds)
        orbits.emplace_back(kind);

    for (int n = 0; n <= 6; ++n) {
        uint64_t total = uint64_t(1) << (n * (n - 1) / 2);
        for (uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, mask);
            for (size_t k = 0; k < 6; ++k) {
                auto w = find_forbidden(g, all_forbidden_kinds[k]);
                bool expect = orbits[k].found_in(g);
                REQUIRE(w.has_value() == expect);
                if (w)
                    REQUIRE(witness_is_valid(g, *w));
            }
        }
    }
}

TEST_CASE("detectors match the oracle on sampled 7- and 8-vertex graphs") {
    std::vector<PatternOrbit> orbits;
    for (ForbiddenKind kind : all_forbidden_kinds)
        orbits.emplace_back(kind);
    Rng rng(4242);
    for (int round = 0; round < 4000; ++round) {
        int n = 7 + rng.below(2);
        Graph g = random_graph(n, 0.15 + 0.1 * rng.below(8), rng);
        for (size_t k = 0; k < 6; ++k) {
            auto w = find_forbidden(g, all_forbidden_kinds[k]);
            REQUIRE(w.has_value() == orbits[k].found_in(g));
            if (w)
                REQUIRE(witness_is_valid(g, *w));
        }
    }
}

TEST_CASE("class members have stability number at most 3") {
    Rng rng(555);
    int members = 0;
    for (int round = 0; round < 4000 && members < 150; ++round) {
        int n = 4 + rng.below(4);
        Graph g = random_graph(n, 0.6, rng);
        if (!in_class(g).in_class)
            continue;
        ++members;
        CHECK(stability_number(g).size <= 3);
    }
    CHECK(members >= 50);
}
