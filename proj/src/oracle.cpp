#include "hexfree/oracle.hpp"

#include <algorithm>

#include "hexfree/recognition.hpp"

namespace hexfree {

namespace {

// Plain maximum clique by include/exclude on the highest-index vertex.
int clique_rec(const Graph& g, std::vector<int>& current, int from) {
    int best = static_cast<int>(current.size());
    for (int v = from; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (int u : current)
            if (!g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        current.push_back(v);
        best = std::max(best, clique_rec(g, current, v + 1));
        current.pop_back();
    }
    return best;
}

bool k_colorable_rec(const Graph& g, std::vector<int>& color, int v, int k, int used) {
    if (v == g.vertex_count())
        return true;
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int u = 0; u < v; ++u)
            if (color[u] == c && g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        color[v] = c;
        if (k_colorable_rec(g, color, v + 1, k, std::max(used, c + 1)))
            return true;
        color[v] = -1;
    }
    return false;
}

int chromatic_unguarded(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0)
        return 0;
    std::vector<int> cur;
    int k = clique_rec(g, cur, 0);
    for (;; ++k) {
        std::vector<int> color(n, -1);
        if (k_colorable_rec(g, color, 0, k, 0))
            return k;
    }
}

} // namespace

int brute_chromatic(const Graph& g) {
    if (g.vertex_count() > 14)
        throw InputError("brute_chromatic guard: more than 14 vertices");
    return chromatic_unguarded(g);
}

int brute_edge_chromatic(const Graph& g) {
    auto edges = g.edges();
    if (edges.size() > 20)
        throw InputError("brute_edge_chromatic guard: more than 20 edges");
    int k = static_cast<int>(edges.size());
    Graph incidence(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                incidence.add_edge(i, j);
        }
    return chromatic_unguarded(incidence);
}

std::optional<std::vector<int>> brute_list_color(const ListInstance& inst) {
    int n = inst.graph.vertex_count();
    if (n > 12)
        throw InputError("brute_list_color guard: more than 12 vertices");
    std::vector<int> list_of(n, -1);
    for (int i = 0; i < 3; ++i)
        for (int v : inst.cliques[i])
            list_of[v] = i;
    std::vector<int> colors(n, -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n)
            return true;
        if (list_of[v] < 0)
            return false; // vertex outside every clique: unsatisfiable instance
        for (int c : inst.lists[list_of[v]]) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (colors[u] == c && inst.graph.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            colors[v] = c;
            if (self(self, v + 1))
                return true;
            colors[v] = -1;
        }
        return false;
    };
    if (!rec(rec, 0))
        return std::nullopt;
    return colors;
}

namespace {

int matching_rec(const std::vector<std::pair<int, int>>& edges, std::vector<bool>& used, size_t i) {
    if (i == edges.size())
        return 0;
    int best = matching_rec(edges, used, i + 1);
    auto [u, v] = edges[i];
    if (!used[u] && !used[v]) {
        used[u] = used[v] = true;
        best = std::max(best, 1 + matching_rec(edges, used, i + 1));
        used[u] = used[v] = false;
    }
    return best;
}

} // namespace

int brute_max_matching(const Graph& g) {
    auto edges = g.edges();
    if (edges.size() > 20)
        throw InputError("brute_max_matching guard: more than 20 edges");
    std::vector<bool> used(g.vertex_count(), false);
    return matching_rec(edges, used, 0);
}

int brute_clique_number(const Graph& g) {
    if (g.vertex_count() > 20)
        throw InputError("brute_clique_number guard: more than 20 vertices");
    std::vector<int> cur;
    return clique_rec(g, cur, 0);
}

int brute_stability_number(const Graph& g) {
    if (g.vertex_count() > 20)
        throw InputError("brute_stability_number guard: more than 20 vertices");
    return brute_clique_number(complement(g));
}

// --- generator ----------------------------------------------------------------

Graph build_c5_shape(const C5ShapeSpec& shape) {
    uint64_t state = shape.seed ? shape.seed : 0x9e3779b97f4a7c15ULL;
    auto next_u64 = [&state]() {
        // splitmix64
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    auto chance = [&](double p) {
        return next_u64() < static_cast<uint64_t>(p * 18446744073709551615.0);
    };

    int n = 5;
    std::array<std::vector<int>, 5> X;
    std::array<int, 5> Y;
    Y.fill(-1);
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k < shape.x_sizes[i]; ++k)
            X[i].push_back(n++);
    for (int i = 0; i < 5; ++i)
        if (shape.y_present[i])
            Y[i] = n++;
    std::vector<int> R;
    for (int k = 0; k < shape.r_size; ++k)
        R.push_back(n++);

    Graph g(n);
    for (int i = 0; i < 5; ++i)
        g.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) {
        for (int x : X[i]) {
            g.add_edge(x, i);
            g.add_edge(x, (i + 1) % 5);
        }
        for (size_t a = 0; a < X[i].size(); ++a)
            for (size_t b = a + 1; b < X[i].size(); ++b)
                g.add_edge(X[i][a], X[i][b]);
    }
    for (int i = 0; i < 5; ++i) {
        if (Y[i] < 0)
            continue;
        for (int t = 0; t < 4; ++t)
            g.add_edge(Y[i], (i + t) % 5);
        // X_i joins Y_i and Y_{i+3}; forced, or the class is lost immediately.
        for (int j : {i, (i + 2) % 5}) // Y_i joins X_i and X_{i+2}: i = j or i = j+3
            for (int x : X[j])
                g.add_edge(Y[i], x);
    }
    for (int i = 0; i < 5; ++i)
        if (!X[i].empty() && Y[i] >= 0 && Y[(i + 3) % 5] >= 0)
            g.add_edge(Y[i], Y[(i + 3) % 5]);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 2; j < i + 4; ++j)
            if (Y[i] >= 0 && Y[j % 5] >= 0 && !g.adjacent(Y[i], Y[j % 5]) &&
                chance(shape.yy_edge_prob))
                g.add_edge(Y[i], Y[j % 5]);

    // Optional partial matchings between distinct X-sets.
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            if (X[i].empty() || X[j].empty())
                continue;
            std::vector<int> right = X[j];
            for (int x : X[i]) {
                if (right.empty())
                    break;
                if (!chance(shape.cross_edge_prob))
                    continue;
                int pick = static_cast<int>(next_u64() % right.size());
                g.add_edge(x, right[pick]);
                right.erase(right.begin() + pick);
            }
        }

    for (int r : R) {
        for (int i = 0; i < 5; ++i)
            for (int x : X[i])
                g.add_edge(r, x);
        for (int r2 : R)
            if (r2 != r && !g.adjacent(r, r2))
                g.add_edge(r, r2);
    }
    return g;
}

Generator::Generator(GenSpec spec)
    : spec_(spec), rng_state_(spec.seed ? spec.seed : 1), exh_n_(spec.n_min), exh_mask_(0) {
    if (spec_.strategy == GenStrategy::exhaustive_labeled && spec_.n_max > 7)
        throw InputError("exhaustive_labeled supports at most 7 vertices");
    if (spec_.n_min < 0 || spec_.n_min > spec_.n_max)
        throw InputError("bad generator size range");
}

uint64_t Generator::next_u64() {
    rng_state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = rng_state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int Generator::below(int n) {
    return n <= 1 ? 0 : static_cast<int>(next_u64() % static_cast<uint64_t>(n));
}

bool Generator::chance(double p) {
    return next_u64() < static_cast<uint64_t>(p * 18446744073709551615.0);
}

std::optional<Graph> Generator::next_exhaustive() {
    while (exh_n_ <= spec_.n_max) {
        int n = exh_n_;
        int bits = n * (n - 1) / 2;
        uint64_t total = uint64_t(1) << bits;
        while (exh_mask_ < total) {
            uint64_t mask = exh_mask_++;
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1)
                        g.add_edge(u, v);
            if (in_class(g).in_class)
                return g;
        }
        ++exh_n_;
        exh_mask_ = 0;
    }
    return std::nullopt;
}

std::optional<Graph> Generator::next_random() {
    static const double grid[] = {0.3, 0.5, 0.7, 0.85, 0.95};
    for (int attempt = 0; attempt < 200000; ++attempt) {
        int n = spec_.n_min + below(spec_.n_max - spec_.n_min + 1);
        double p = grid[below(5)];
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (chance(p))
                    g.add_edge(u, v);
        if (in_class(g).in_class)
            return g;
    }
    return std::nullopt;
}

std::optional<Graph> Generator::next_constructive() {
    for (int attempt = 0; attempt < 200000; ++attempt) {
        C5ShapeSpec shape;
        shape.seed = next_u64();
        shape.cross_edge_prob = 0.25;
        shape.yy_edge_prob = 0.5;
        int budget = spec_.n_max - 5;
        if (budget < 0)
            continue;
        bool canonical_pattern = chance(0.7);
        std::vector<int> positions;
        if (canonical_pattern) {
            int i = below(5);
            positions = {i, (i + 1) % 5, (i + 3) % 5};
        } else {
            for (int p = 0; p < 5; ++p)
                if (chance(0.5))
                    positions.push_back(p);
        }
        for (int p : positions) {
            if (budget <= 0)
                break;
            int sz = 1 + below(std::min(4, budget));
            shape.x_sizes[p] = sz;
            budget -= sz;
        }
        for (int p = 0; p < 5 && budget > 0; ++p)
            if (chance(0.35)) {
                shape.y_present[p] = true;
                --budget;
            }
        bool small_x = true;
        for (int p = 0; p < 5; ++p)
            if (shape.x_sizes[p] > 2)
                small_x = false;
        if (small_x && budget > 0 && chance(0.2))
            shape.r_size = 1 + below(std::min(2, budget));
        Graph g = build_c5_shape(shape);
        if (g.vertex_count() < spec_.n_min || g.vertex_count() > spec_.n_max)
            continue;
        if (!find_hole(g, 5))
            continue;
        if (in_class(g).in_class)
            return g;
    }
    return std::nullopt;
}

std::optional<Graph> Generator::next() {
    switch (spec_.strategy) {
    case GenStrategy::exhaustive_labeled: return next_exhaustive();
    case GenStrategy::random_filtered: return next_random();
    case GenStrategy::constructive_c5: return next_constructive();
    }
    return std::nullopt;
}

} // namespace hexfree
