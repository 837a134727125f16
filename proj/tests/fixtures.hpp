#ifndef HEXFREE_TEST_FIXTURES_HPP
#define HEXFREE_TEST_FIXTURES_HPP

#include <cstdint>

#include "hexfree/graph.hpp"

namespace hexfree::testing {

inline Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

// Outer cycle 0..4, inner pentagram 5..9 (5+i adjacent to 5+(i+2)%5),
// spokes i to 5+i.
inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

inline Graph co_petersen() {
    return complement(petersen());
}

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ? seed : 1) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % uint64_t(n)); }
    bool chance(double p) { return next() < static_cast<uint64_t>(p * 18446744073709551615.0); }
};

inline Graph random_graph(int n, double p, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p))
                g.add_edge(u, v);
    return g;
}

// All labeled graphs on n vertices, mask over the C(n,2) vertex pairs.
inline Graph graph_from_mask(int n, uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1)
                g.add_edge(u, v);
    return g;
}

} // namespace hexfree::testing

#endif
