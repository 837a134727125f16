#ifndef HEXFREE_TEST_LIST_GEN_HPP
#define HEXFREE_TEST_LIST_GEN_HPP

#include <optional>

#include "fixtures.hpp"
#include "hexfree/coloring.hpp"

namespace hexfree::testing {

// Random valid three-clique list instances with |Q_i| <= 4: random cross
// matchings re-rolled until the adjacency conditions hold, lists grown
// around distinct designated colors without ever covering a color three
// times.
inline std::optional<ListInstance> try_random_list_instance(Rng& rng) {
    ListInstance inst;
    std::array<int, 3> sizes{rng.below(5), rng.below(5), rng.below(5)};
    int n = sizes[0] + sizes[1] + sizes[2];
    inst.graph = Graph(n);
    int next = 0;
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < sizes[i]; ++k)
            inst.cliques[i].push_back(next++);
        for (size_t a = 0; a < inst.cliques[i].size(); ++a)
            for (size_t b = a + 1; b < inst.cliques[i].size(); ++b)
                inst.graph.add_edge(inst.cliques[i][a], inst.cliques[i][b]);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            std::vector<int> right = inst.cliques[j];
            for (int a : inst.cliques[i]) {
                if (right.empty() || !rng.chance(0.4))
                    continue;
                int pick = rng.below(static_cast<int>(right.size()));
                inst.graph.add_edge(a, right[pick]);
                right.erase(right.begin() + pick);
            }
        }

    int universe = 3 + rng.below(5);
    std::array<int, 3> d{};
    d[0] = rng.below(universe);
    do
        d[1] = rng.below(universe);
    while (d[1] == d[0]);
    do
        d[2] = rng.below(universe);
    while (d[2] == d[0] || d[2] == d[1]);
    inst.designated = d;
    for (int i = 0; i < 3; ++i)
        inst.lists[i] = {d[i]};

    auto in_list = [&](int i, int c) {
        return std::find(inst.lists[i].begin(), inst.lists[i].end(), c) != inst.lists[i].end();
    };
    for (int i = 0; i < 3; ++i) {
        int want = std::max<int>(sizes[i], 1) + (rng.chance(0.3) ? 1 : 0);
        int guard = 0;
        while (static_cast<int>(inst.lists[i].size()) < want && guard++ < 100) {
            int c = rng.below(universe);
            if (in_list(i, c))
                continue;
            int others = 0;
            for (int j = 0; j < 3; ++j)
                if (j != i && in_list(j, c))
                    ++others;
            if (others == 2)
                continue; // would cover all three lists
            inst.lists[i].push_back(c);
        }
        std::sort(inst.lists[i].begin(), inst.lists[i].end());
        if (static_cast<int>(inst.lists[i].size()) < sizes[i])
            return std::nullopt;
    }

    if (!validate_list_instance(inst).empty())
        return std::nullopt;
    return inst;
}

inline ListInstance random_valid_list_instance(Rng& rng) {
    while (true) {
        auto inst = try_random_list_instance(rng);
        if (inst)
            return *inst;
    }
}

} // namespace hexfree::testing

#endif
