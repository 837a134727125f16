#include "hexfree/recognition.hpp"

#include <algorithm>

namespace hexfree {

std::string to_string(ForbiddenKind kind) {
    switch (kind) {
    case ForbiddenKind::claw: return "claw";
    case ForbiddenKind::four_K1: return "4K1";
    case ForbiddenKind::K5_minus_e: return "K5-e";
    case ForbiddenKind::five_wheel: return "5-wheel";
    case ForbiddenKind::C5_twin: return "C5-twin";
    case ForbiddenKind::P5_twin: return "P5-twin";
    }
    return "?";
}

int pattern_size(ForbiddenKind kind) {
    switch (kind) {
    case ForbiddenKind::claw:
    case ForbiddenKind::four_K1: return 4;
    case ForbiddenKind::K5_minus_e: return 5;
    default: return 6;
    }
}

Graph pattern_graph(ForbiddenKind kind) {
    switch (kind) {
    case ForbiddenKind::claw: return Graph(4, {{0, 1}, {0, 2}, {0, 3}});
    case ForbiddenKind::four_K1: return Graph(4, {});
    case ForbiddenKind::K5_minus_e:
        return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    case ForbiddenKind::five_wheel:
        return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                         {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
    case ForbiddenKind::C5_twin:
        return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 4}});
    case ForbiddenKind::P5_twin:
        return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 1}, {5, 2}, {5, 3}});
    }
    throw InputError("unknown pattern kind");
}

bool witness_is_valid(const Graph& g, const Witness& w) {
    Graph pat = pattern_graph(w.kind);
    int k = pat.vertex_count();
    if (static_cast<int>(w.vertices.size()) != k)
        return false;
    for (int v : w.vertices)
        if (v < 0 || v >= g.vertex_count())
            return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (w.vertices[i] == w.vertices[j])
                return false;
            if (g.adjacent(w.vertices[i], w.vertices[j]) != pat.adjacent(i, j))
                return false;
        }
    return true;
}

namespace {

VertexSet full_set(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        s.set(v);
    return s;
}

// Neighborhood of v plus v itself; subtracting it enforces both
// non-adjacency to v and distinctness from v.
VertexSet closed(const Graph& g, int v) {
    VertexSet s = g.neighbors(v);
    s.set(v);
    return s;
}

std::optional<Witness> find_claw(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const VertexSet& nb = g.neighbors(v);
        for (int a = nb.first(); a >= 0; a = nb.next(a)) {
            VertexSet rest = nb;
            rest -= closed(g, a);
            for (int b = rest.next(a); b >= 0; b = rest.next(b)) {
                VertexSet third = rest;
                third -= closed(g, b);
                int c = third.next(b);
                if (c >= 0)
                    return Witness{ForbiddenKind::claw, {v, a, b, c}};
            }
        }
    }
    return std::nullopt;
}

std::optional<Witness> find_four_k1(const Graph& g) {
    int n = g.vertex_count();
    VertexSet all = full_set(n);
    for (int a = 0; a < n; ++a) {
        VertexSet after_a = all;
        after_a -= closed(g, a);
        for (int b = after_a.next(a); b >= 0; b = after_a.next(b)) {
            VertexSet after_b = after_a;
            after_b -= closed(g, b);
            for (int c = after_b.next(b); c >= 0; c = after_b.next(c)) {
                VertexSet after_c = after_b;
                after_c -= closed(g, c);
                int d = after_c.next(c);
                if (d >= 0)
                    return Witness{ForbiddenKind::four_K1, {a, b, c, d}};
            }
        }
    }
    return std::nullopt;
}

std::optional<Witness> find_k5_minus_e(const Graph& g) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b))
                continue;
            VertexSet common = g.neighbors(a);
            common &= g.neighbors(b);
            for (int u = common.first(); u >= 0; u = common.next(u)) {
                VertexSet cu = common;
                cu &= g.neighbors(u);
                for (int v = cu.next(u); v >= 0; v = cu.next(v)) {
                    VertexSet cv = cu;
                    cv &= g.neighbors(v);
                    int w = cv.next(v);
                    if (w >= 0)
                        return Witness{ForbiddenKind::K5_minus_e, {u, v, w, a, b}};
                }
            }
        }
    return std::nullopt;
}

// Chordless 5-cycle with all vertices inside `mask`, as (a,b,c,d,e) in cyclic
// order with a smallest; or nullopt.
std::optional<std::vector<int>> induced_c5_within(const Graph& g, const VertexSet& mask) {
    for (int a = mask.first(); a >= 0; a = mask.next(a)) {
        VertexSet na = g.neighbors(a);
        na &= mask;
        for (int b = na.next(a); b >= 0; b = na.next(b)) {
            for (int e = na.next(b); e >= 0; e = na.next(e)) {
                if (g.adjacent(b, e))
                    continue;
                VertexSet cs = g.neighbors(b);
                cs &= mask;
                cs -= closed(g, a);
                cs -= closed(g, e);
                for (int c = cs.first(); c >= 0; c = cs.next(c)) {
                    if (c <= a)
                        continue;
                    VertexSet ds = g.neighbors(c);
                    ds &= g.neighbors(e);
                    ds &= mask;
                    ds -= closed(g, a);
                    ds -= closed(g, b);
                    int d = ds.first();
                    while (d >= 0 && d <= a)
                        d = ds.next(d);
                    if (d >= 0)
                        return std::vector<int>{a, b, c, d, e};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Witness> find_five_wheel(const Graph& g) {
    for (int hub = 0; hub < g.vertex_count(); ++hub) {
        auto rim = induced_c5_within(g, g.neighbors(hub));
        if (rim) {
            std::vector<int> verts{hub};
            verts.insert(verts.end(), rim->begin(), rim->end());
            return Witness{ForbiddenKind::five_wheel, verts};
        }
    }
    return std::nullopt;
}

std::optional<Witness> find_c5_twin(const Graph& g) {
    int n = g.vertex_count();
    for (int c0 = 0; c0 < n; ++c0) {
        const VertexSet& nb0 = g.neighbors(c0);
        for (int t = nb0.first(); t >= 0; t = nb0.next(t)) {
            VertexSet common = nb0;
            common &= g.neighbors(t);
            for (int c1 = common.first(); c1 >= 0; c1 = common.next(c1)) {
                for (int c4 = common.first(); c4 >= 0; c4 = common.next(c4)) {
                    if (c4 == c1 || g.adjacent(c1, c4))
                        continue;
                    VertexSet c2s = g.neighbors(c1);
                    c2s -= closed(g, c0);
                    c2s -= closed(g, t);
                    c2s -= closed(g, c4);
                    for (int c2 = c2s.first(); c2 >= 0; c2 = c2s.next(c2)) {
                        VertexSet c3s = g.neighbors(c2);
                        c3s &= g.neighbors(c4);
                        c3s -= closed(g, c0);
                        c3s -= closed(g, t);
                        c3s -= closed(g, c1);
                        int c3 = c3s.first();
                        if (c3 >= 0)
                            return Witness{ForbiddenKind::C5_twin, {c0, c1, c2, c3, c4, t}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Witness> find_p5_twin(const Graph& g) {
    int n = g.vertex_count();
    for (int p2 = 0; p2 < n; ++p2) {
        const VertexSet& nb2 = g.neighbors(p2);
        for (int t = nb2.first(); t >= 0; t = nb2.next(t)) {
            VertexSet common = nb2;
            common &= g.neighbors(t);
            for (int p1 = common.first(); p1 >= 0; p1 = common.next(p1)) {
                for (int p3 = common.first(); p3 >= 0; p3 = common.next(p3)) {
                    if (p3 == p1 || g.adjacent(p1, p3))
                        continue;
                    VertexSet p0s = g.neighbors(p1);
                    p0s -= closed(g, p2);
                    p0s -= closed(g, t);
                    p0s -= closed(g, p3);
                    for (int p0 = p0s.first(); p0 >= 0; p0 = p0s.next(p0)) {
                        VertexSet p4s = g.neighbors(p3);
                        p4s -= closed(g, p2);
                        p4s -= closed(g, t);
                        p4s -= closed(g, p1);
                        p4s -= closed(g, p0);
                        int p4 = p4s.first();
                        if (p4 >= 0)
                            return Witness{ForbiddenKind::P5_twin, {p0, p1, p2, p3, p4, t}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Witness> find_forbidden(const Graph& g, ForbiddenKind kind) {
    switch (kind) {
    case ForbiddenKind::claw: return find_claw(g);
    case ForbiddenKind::four_K1: return find_four_k1(g);
    case ForbiddenKind::K5_minus_e: return find_k5_minus_e(g);
    case ForbiddenKind::five_wheel: return find_five_wheel(g);
    case ForbiddenKind::C5_twin: return find_c5_twin(g);
    case ForbiddenKind::P5_twin: return find_p5_twin(g);
    }
    throw InputError("unknown pattern kind");
}

ClassCheck in_class(const Graph& g) {
    for (ForbiddenKind kind : all_forbidden_kinds) {
        auto w = find_forbidden(g, kind);
        if (w)
            return ClassCheck{false, std::move(w)};
    }
    return ClassCheck{true, std::nullopt};
}

namespace {

// Tomita-style branch and bound: candidates are greedily partitioned into
// stable classes; a clique takes at most one vertex per class.
struct CliqueSearch {
    const Graph& g;
    int best = 0;
    std::vector<int> best_set;
    std::vector<int> current;

    explicit CliqueSearch(const Graph& graph) : g(graph) {}

    void expand(const VertexSet& cands) {
        int remaining = cands.count();
        if (remaining == 0) {
            if (static_cast<int>(current.size()) > best) {
                best = static_cast<int>(current.size());
                best_set = current;
            }
            return;
        }
        if (static_cast<int>(current.size()) + remaining <= best)
            return;

        std::vector<int> order;
        std::vector<int> color_of;
        order.reserve(remaining);
        color_of.reserve(remaining);
        {
            VertexSet uncolored = cands;
            int color = 0;
            while (!uncolored.empty()) {
                ++color;
                VertexSet cls = uncolored;
                for (int v = cls.first(); v >= 0; v = cls.next(v)) {
                    order.push_back(v);
                    color_of.push_back(color);
                    uncolored.reset(v);
                    cls -= closed(g, v);
                }
            }
        }
        VertexSet live = cands;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            int v = order[i];
            if (static_cast<int>(current.size()) + color_of[i] <= best)
                return;
            VertexSet next = live;
            next &= g.neighbors(v);
            current.push_back(v);
            expand(next);
            current.pop_back();
            live.reset(v);
        }
    }
};

} // namespace

CliqueResult clique_number(const Graph& g) {
    CliqueSearch search(g);
    search.expand(full_set(g.vertex_count()));
    std::sort(search.best_set.begin(), search.best_set.end());
    return CliqueResult{search.best, search.best_set};
}

CliqueResult stability_number(const Graph& g) {
    return clique_number(complement(g));
}

namespace {

// Enumerates k-subsets in lexicographic order; a partial choice is abandoned
// as soon as some chosen vertex has three neighbors inside it.
bool hole_search(const Graph& g, int length, std::vector<int>& chosen, std::vector<int>& deg,
                 int from) {
    if (static_cast<int>(chosen.size()) == length) {
        for (int d : deg)
            if (d != 2)
                return false;
        auto sub = induced_subgraph(g, chosen);
        return is_connected(sub.graph);
    }
    for (int v = from; v < g.vertex_count(); ++v) {
        int dv = 0;
        bool ok = true;
        for (size_t i = 0; i < chosen.size(); ++i) {
            if (g.adjacent(chosen[i], v)) {
                ++dv;
                if (deg[i] == 2 || dv > 2) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok)
            continue;
        // Vertices already at degree 2 must stay at degree 2; vertices below
        // can still be completed later.
        chosen.push_back(v);
        for (size_t i = 0; i + 1 < chosen.size(); ++i)
            if (g.adjacent(chosen[i], v))
                ++deg[i];
        deg.push_back(dv);
        if (hole_search(g, length, chosen, deg, v + 1))
            return true;
        deg.pop_back();
        for (size_t i = 0; i + 1 < chosen.size(); ++i)
            if (g.adjacent(chosen[i], v))
                --deg[i];
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_hole(const Graph& g, int length) {
    if (length != 5 && length != 7)
        throw InputError("find_hole supports lengths 5 and 7");
    std::vector<int> chosen, deg;
    if (!hole_search(g, length, chosen, deg, 0))
        return std::nullopt;
    // Rebuild the cyclic order starting at the least vertex.
    std::vector<int> cycle{chosen[0]};
    VertexSet used(g.vertex_count());
    used.set(chosen[0]);
    while (static_cast<int>(cycle.size()) < length) {
        int prev = cycle.back();
        int pick = -1;
        for (int v : chosen)
            if (!used.test(v) && g.adjacent(prev, v) && (pick < 0 || v < pick))
                pick = v;
        cycle.push_back(pick);
        used.set(pick);
    }
    return cycle;
}

bool is_perfect_in_class(const Graph& g) {
    if (!is_connected(g))
        throw InputError("is_perfect_in_class: graph must be connected");
    if (!in_class(g).in_class)
        throw InputError("is_perfect_in_class: graph is not in the class");
    // A short odd hole settles imperfection regardless of the stability
    // number; the affirmative answer needs alpha >= 3 (otherwise big odd
    // antiholes could hide from the C5/C7 scan).
    if (find_hole(g, 5).has_value() || find_hole(g, 7).has_value())
        return false;
    if (stability_number(g).size < 3)
        throw InputError("is_perfect_in_class: stability number must be >= 3");
    return true;
}

} // namespace hexfree
