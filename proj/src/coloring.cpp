#include "hexfree/coloring.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "hexfree/decomposition.hpp"
#include "hexfree/matching.hpp"

namespace hexfree {

long long default_node_budget() {
    if (const char* env = std::getenv("HEXFREE_NODE_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
    }
    return 100000000LL;
}

namespace {

Coloring trivial_coloring(int n) {
    Coloring c;
    c.colors.assign(n, 0);
    c.color_count = n > 0 ? 1 : 0;
    return c;
}

Coloring greedy_dsatur(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<VertexSet> neighbor_colors; // bitmask over colors, per vertex
    std::vector<int> sat(n, 0);
    neighbor_colors.assign(n, VertexSet(n == 0 ? 1 : n));
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (color[u] != -1)
                continue;
            if (v == -1 || sat[u] > sat[v] ||
                (sat[u] == sat[v] && g.degree(u) > g.degree(v)))
                v = u;
        }
        int c = 0;
        while (neighbor_colors[v].test(c))
            ++c;
        color[v] = c;
        used = std::max(used, c + 1);
        const VertexSet& nb = g.neighbors(v);
        for (int u = nb.first(); u >= 0; u = nb.next(u))
            if (color[u] == -1 && !neighbor_colors[u].test(c)) {
                neighbor_colors[u].set(c);
                ++sat[u];
            }
    }
    Coloring out;
    out.colors = std::move(color);
    out.color_count = used;
    return out;
}

// Complete search for a proper k-coloring: DSATUR vertex choice, colors
// capped at one more than the number already in use, maximum clique
// precolored. Every color trial costs one budget node.
struct KColorSearch {
    const Graph& g;
    int n, k;
    long long& budget;
    std::vector<int> color;
    std::vector<std::vector<int>> forbid_count; // per vertex, per color

    KColorSearch(const Graph& graph, int colors, long long& budget_ref)
        : g(graph),
          n(graph.vertex_count()),
          k(colors),
          budget(budget_ref),
          color(n, -1),
          forbid_count(n, std::vector<int>(colors, 0)) {}

    void assign(int v, int c) {
        color[v] = c;
        const VertexSet& nb = g.neighbors(v);
        for (int u = nb.first(); u >= 0; u = nb.next(u))
            ++forbid_count[u][c];
    }
    void unassign(int v, int c) {
        color[v] = -1;
        const VertexSet& nb = g.neighbors(v);
        for (int u = nb.first(); u >= 0; u = nb.next(u))
            --forbid_count[u][c];
    }
    int saturation(int v) const {
        int s = 0;
        for (int c = 0; c < k; ++c)
            if (forbid_count[v][c] > 0)
                ++s;
        return s;
    }

    bool solve(int uncolored, int used) {
        if (uncolored == 0)
            return true;
        int v = -1, best_sat = -1;
        for (int u = 0; u < n; ++u) {
            if (color[u] != -1)
                continue;
            int s = saturation(u);
            if (s == k)
                return false; // dead vertex
            if (v == -1 || s > best_sat ||
                (s == best_sat && g.degree(u) > g.degree(v)))
                v = u, best_sat = s;
        }
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (forbid_count[v][c] > 0)
                continue;
            if (--budget < 0)
                throw BudgetExceeded("exact coloring node budget exhausted");
            assign(v, c);
            if (solve(uncolored - 1, std::max(used, c + 1)))
                return true;
            unassign(v, c);
        }
        return false;
    }
};

} // namespace

Coloring exact_color(const Graph& g, long long node_budget) {
    int n = g.vertex_count();
    if (n == 0)
        return Coloring{};
    long long budget = node_budget >= 0 ? node_budget : default_node_budget();

    CliqueResult clique = clique_number(g);
    Coloring upper = greedy_dsatur(g);
    if (upper.color_count == clique.size)
        return upper;

    for (int k = clique.size; k < upper.color_count; ++k) {
        KColorSearch search(g, k, budget);
        int used = 0;
        for (int v : clique.vertices)
            search.assign(v, used++);
        if (search.solve(n - clique.size, used)) {
            Coloring out = make_coloring(search.color);
            return out;
        }
    }
    return upper;
}

Coloring color_alpha2(const Graph& g) {
    CliqueResult alpha = stability_number(g);
    if (alpha.size > 2)
        throw InputError("color_alpha2: stability number exceeds 2");
    Graph co = complement(g);
    Matching m = max_matching(co);
    std::vector<int> color(g.vertex_count(), -1);
    int next = 0;
    for (auto [u, v] : m.edges) {
        color[u] = color[v] = next++;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (color[v] == -1)
            color[v] = next++;
    Coloring out = make_coloring(color);
    if (!is_proper(g, out))
        throw StructureViolation("color_alpha2 produced an improper coloring");
    return out;
}

// --- three-clique list coloring --------------------------------------------

std::vector<std::string> validate_list_instance(const ListInstance& inst) {
    std::vector<std::string> problems;
    const Graph& g = inst.graph;
    int n = g.vertex_count();
    std::vector<int> owner(n, -1);
    for (int i = 0; i < 3; ++i)
        for (int v : inst.cliques[i]) {
            if (v < 0 || v >= n) {
                problems.push_back("clique vertex out of range");
                return problems;
            }
            if (owner[v] != -1)
                problems.push_back("vertex " + std::to_string(v) + " in two cliques");
            owner[v] = i;
        }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1)
            problems.push_back("vertex " + std::to_string(v) + " in no clique");
    for (int i = 0; i < 3; ++i)
        if (!is_clique(g, inst.cliques[i]))
            problems.push_back("clique " + std::to_string(i) + " is not a clique");

    // (a) at most one neighbor in each other clique
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < 3; ++j) {
            if (owner[v] == j)
                continue;
            int cnt = 0;
            for (int u : inst.cliques[j])
                if (g.adjacent(v, u))
                    ++cnt;
            if (cnt > 1)
                problems.push_back("vertex " + std::to_string(v) + " has " +
                                   std::to_string(cnt) + " neighbors in clique " +
                                   std::to_string(j));
        }
    // (b) cross neighbors in the two other cliques are adjacent
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (owner[b] != owner[v] && owner[c] != owner[v] && owner[b] != owner[c] &&
                    g.adjacent(v, b) && g.adjacent(v, c) && !g.adjacent(b, c))
                    problems.push_back("cross neighbors " + std::to_string(b) + "," +
                                       std::to_string(c) + " of " + std::to_string(v) +
                                       " are nonadjacent");
    // (c)
    for (int i = 0; i < 3; ++i) {
        if (inst.lists[i].size() < inst.cliques[i].size())
            problems.push_back("list " + std::to_string(i) + " smaller than its clique");
        if (!std::is_sorted(inst.lists[i].begin(), inst.lists[i].end()) ||
            std::adjacent_find(inst.lists[i].begin(), inst.lists[i].end()) !=
                inst.lists[i].end())
            problems.push_back("list " + std::to_string(i) + " not sorted/unique");
        if (!std::binary_search(inst.lists[i].begin(), inst.lists[i].end(),
                                inst.designated[i]))
            problems.push_back("designated color of clique " + std::to_string(i) +
                               " not in its list");
    }
    if (inst.designated[0] == inst.designated[1] || inst.designated[0] == inst.designated[2] ||
        inst.designated[1] == inst.designated[2])
        problems.push_back("designated colors not pairwise distinct");
    for (int c : inst.lists[0])
        if (std::binary_search(inst.lists[1].begin(), inst.lists[1].end(), c) &&
            std::binary_search(inst.lists[2].begin(), inst.lists[2].end(), c))
            problems.push_back("color " + std::to_string(c) + " appears in all three lists");
    return problems;
}

namespace {

struct ListState {
    std::array<std::vector<int>, 3> q;     // alive vertices per clique
    std::array<std::vector<int>, 3> lists; // current lists
    std::array<int, 3> d;
};

bool contains(const std::vector<int>& xs, int x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

void erase_value(std::vector<int>& xs, int x) {
    xs.erase(std::remove(xs.begin(), xs.end(), x), xs.end());
}

// Complete backtracking over the remaining vertices with their current
// lists; used for the residual cases the induction leaves open. Only edges
// among alive vertices matter: the reductions keep every assigned color out
// of the lists of its live neighbors.
bool list_backtrack(const Graph& g, const ListState& st, std::vector<int>& colors,
                    std::vector<std::pair<int, int>>& order, size_t idx) {
    if (idx == order.size())
        return true;
    auto [v, clique] = order[idx];
    for (int c : st.lists[clique]) {
        bool ok = true;
        for (size_t j = 0; j < idx; ++j)
            if (colors[order[j].first] == c && g.adjacent(order[j].first, v)) {
                ok = false;
                break;
            }
        // within-clique repetition is improper too
        for (size_t j = 0; j < idx && ok; ++j)
            if (order[j].second == clique && colors[order[j].first] == c)
                ok = false;
        if (!ok)
            continue;
        colors[v] = c;
        if (list_backtrack(g, st, colors, order, idx + 1))
            return true;
        colors[v] = -1;
    }
    return false;
}

bool solve_by_backtracking(const Graph& g, const ListState& st, std::vector<int>& colors) {
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < 3; ++i)
        for (int v : st.q[i])
            order.emplace_back(v, i);
    return list_backtrack(g, st, colors, order, 0);
}

void l_color_rec(const Graph& g, ListState st, std::vector<int>& colors) {
    size_t s0 = st.q[0].size(), s1 = st.q[1].size(), s2 = st.q[2].size();
    if (s0 + s1 + s2 == 0)
        return;

    // Some clique exhausted: the remaining two-clique instance is settled by
    // bounded search.
    if (s0 == 0 || s1 == 0 || s2 == 0) {
        if (!solve_by_backtracking(g, st, colors))
            throw StructureViolation("two-clique list coloring unexpectedly unsatisfiable");
        return;
    }

    if (s0 == 1 && s1 == 1 && s2 == 1) {
        for (int i = 0; i < 3; ++i)
            colors[st.q[i][0]] = st.d[i];
        return;
    }

    for (int i = 0; i < 3; ++i) {
        if (st.q[i].size() != 1)
            continue;
        int v = st.q[i][0];
        int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
        bool in1 = contains(st.lists[j1], st.d[i]);
        bool in2 = contains(st.lists[j2], st.d[i]);
        if (!in1 && !in2) {
            // the designated color clashes with nothing ahead
            colors[v] = st.d[i];
            st.q[i].clear();
            l_color_rec(g, std::move(st), colors);
            return;
        }
        for (int j : {j1, j2}) {
            if (!contains(st.lists[j], st.d[i]) || st.q[j].size() < 2)
                continue;
            // place d_i on v and on a nonadjacent partner in the larger clique
            int partner = -1;
            for (int b : st.q[j])
                if (!g.adjacent(v, b)) {
                    partner = b;
                    break;
                }
            if (partner < 0)
                throw StructureViolation("no nonadjacent partner in a clique of size >= 2");
            colors[v] = st.d[i];
            colors[partner] = st.d[i];
            st.q[i].clear();
            erase_value(st.q[j], partner);
            erase_value(st.lists[j], st.d[i]);
            l_color_rec(g, std::move(st), colors);
            return;
        }
        // d_i is held only by another singleton clique; the third has >= 2
        // vertices and cannot contain d_i.
        int holder = in1 ? j1 : j2;
        colors[v] = st.d[i];
        st.q[i].clear();
        erase_value(st.lists[holder], st.d[i]);
        l_color_rec(g, std::move(st), colors);
        return;
    }

    // All cliques have >= 2 vertices. Take the smallest non-designated color
    // still on offer.
    int c = -1;
    for (int i = 0; i < 3 && c < 0; ++i)
        for (int x : st.lists[i])
            if (x != st.d[0] && x != st.d[1] && x != st.d[2]) {
                if (c < 0 || x < c)
                    c = x;
            }
    if (c >= 0) {
        std::vector<int> holders;
        for (int i = 0; i < 3; ++i)
            if (contains(st.lists[i], c))
                holders.push_back(i);
        if (holders.size() == 1) {
            int i = holders[0];
            int v = st.q[i][0];
            colors[v] = c;
            erase_value(st.q[i], v);
            erase_value(st.lists[i], c);
            l_color_rec(g, std::move(st), colors);
            return;
        }
        if (holders.size() == 2) {
            int i = holders[0], j = holders[1];
            int a = -1, b = -1;
            for (int x : st.q[i]) {
                for (int y : st.q[j])
                    if (!g.adjacent(x, y)) {
                        a = x;
                        b = y;
                        break;
                    }
                if (a >= 0)
                    break;
            }
            if (a < 0)
                throw StructureViolation("no nonadjacent cross pair in cliques of size >= 2");
            colors[a] = c;
            colors[b] = c;
            erase_value(st.q[i], a);
            erase_value(st.q[j], b);
            erase_value(st.lists[i], c);
            erase_value(st.lists[j], c);
            l_color_rec(g, std::move(st), colors);
            return;
        }
        throw StructureViolation("non-designated color present in all three lists");
    }

    // Every remaining color is designated; sizes are pinned to 2 and a
    // bounded search finishes.
    if (!solve_by_backtracking(g, st, colors))
        throw StructureViolation("terminal 2-2-2 list coloring unexpectedly unsatisfiable");
}

} // namespace

std::vector<int> l_color_three_cliques(const ListInstance& inst) {
    auto problems = validate_list_instance(inst);
    if (!problems.empty()) {
        std::ostringstream msg;
        msg << "invalid list instance:";
        for (const auto& p : problems)
            msg << " [" << p << "]";
        throw InputError(msg.str());
    }
    std::vector<int> colors(inst.graph.vertex_count(), -1);
    ListState st;
    st.q = inst.cliques;
    st.lists = inst.lists;
    st.d = inst.designated;
    l_color_rec(inst.graph, std::move(st), colors);

    // Self-check: every vertex colored from its own list, properly.
    for (int i = 0; i < 3; ++i)
        for (int v : inst.cliques[i])
            if (colors[v] < 0 || !contains(inst.lists[i], colors[v]))
                throw StructureViolation("list coloring left a vertex off-list");
    for (auto [u, v] : inst.graph.edges())
        if (colors[u] == colors[v])
            throw StructureViolation("list coloring is improper");
    return colors;
}

// --- good stable sets and the X-structure colorings -------------------------

namespace {

// The anchor rotation: smallest i with X[i+2] and X[i+4] empty, i.e. all
// non-empty X-sets among positions {i, i+1, i+3}.
int anchor_position(const C5Structure& s) {
    for (int i = 0; i < 5; ++i)
        if (s.X[(i + 2) % 5].empty() && s.X[(i + 4) % 5].empty())
            return i;
    return -1;
}

Graph remove_vertices(const Graph& g, const std::vector<int>& removed, std::vector<int>& origin) {
    VertexSet drop = VertexSet::of(g.vertex_count(), removed);
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!drop.test(v))
            keep.push_back(v);
    auto sub = induced_subgraph(g, keep);
    origin = sub.origin;
    return sub.graph;
}

std::vector<int> map_to_sub(const std::vector<int>& origin, const std::vector<int>& verts) {
    std::vector<int> out;
    out.reserve(verts.size());
    for (int v : verts) {
        auto it = std::lower_bound(origin.begin(), origin.end(), v);
        out.push_back(static_cast<int>(it - origin.begin()));
    }
    return out;
}

// Lexicographically first stable transversal (one vertex per set), or empty.
std::vector<int> stable_transversal(const Graph& g, const std::vector<std::vector<int>>& sets) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t idx) -> bool {
        if (idx == sets.size())
            return true;
        for (int v : sets[idx]) {
            bool ok = true;
            for (int u : pick)
                if (g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            pick.push_back(v);
            if (self(self, idx + 1))
                return true;
            pick.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0))
        return {};
    return pick;
}

} // namespace

std::vector<int> good_stable_set(const Graph& g, const C5Structure& s) {
    if (!s.R.empty())
        throw InputError("good_stable_set: R must be empty");
    int i = anchor_position(s);
    if (i < 0)
        throw InputError("good_stable_set: non-empty X-sets not at positions {i, i+1, i+3}");

    std::vector<std::vector<int>> nonempty, qualifying;
    for (int p : {i, (i + 1) % 5, (i + 3) % 5}) {
        if (!s.X[p].empty())
            nonempty.push_back(s.X[p]);
        if (s.X[p].size() >= 2)
            qualifying.push_back(s.X[p]);
    }
    if (qualifying.empty())
        throw InputError("good_stable_set: no X-set with two or more vertices");

    std::vector<int> pick = stable_transversal(g, nonempty);
    if (pick.empty())
        pick = stable_transversal(g, qualifying);
    if (pick.empty())
        throw StructureViolation("no stable transversal of the qualifying X-sets exists");

    int omega = clique_number(g).size;
    std::vector<int> origin;
    Graph rest = remove_vertices(g, pick, origin);
    if (clique_number(rest).size != omega - 1)
        throw StructureViolation("stable transversal does not lower the clique number by one");
    std::sort(pick.begin(), pick.end());
    return pick;
}

Coloring color_three_xi_case(const Graph& g, const C5Structure& s) {
    for (int p = 0; p < 5; ++p)
        if (!s.Y[p].empty())
            throw InputError("color_three_xi_case: Y must be empty");
    if (!s.R.empty())
        throw InputError("color_three_xi_case: R must be empty");
    int i = anchor_position(s);
    if (i < 0)
        throw InputError("color_three_xi_case: non-empty X-sets not at positions {i, i+1, i+3}");

    size_t max_x = 0;
    for (const auto& xs : s.X)
        max_x = std::max(max_x, xs.size());

    int n = g.vertex_count();
    if (max_x <= 1) {
        // Cycle pattern 0,1,2,0,2 from the anchor; each X vertex takes the
        // color its two cycle neighbors leave free: 2, 0, 1 at offsets
        // 0, 1, 3 — pairwise distinct, so cross-X edges never clash.
        static const int cycle_pat[5] = {0, 1, 2, 0, 2};
        static const int free_pat[5] = {2, 0, 1, 1, 1};
        std::vector<int> color(n, -1);
        for (int t = 0; t < 5; ++t)
            color[s.c5[(i + t) % 5]] = cycle_pat[t];
        for (int t : {0, 1, 3})
            for (int x : s.X[(i + t) % 5])
                color[x] = free_pat[t];
        Coloring out = make_coloring(color);
        if (!is_proper(g, out) || out.color_count != 3)
            throw StructureViolation("three-X base case produced a bad 3-coloring");
        return out;
    }

    if (max_x == 2) {
        int omega = clique_number(g).size;
        if (omega != 4)
            throw StructureViolation("expected clique number 4 with max |X| = 2");
        static const int cycle_pat[5] = {0, 1, 2, 0, 2};
        static const int free_pat[5] = {2, 0, 1, 1, 1};
        std::vector<std::vector<int>> pairs;
        for (int t : {0, 1, 3})
            if (s.X[(i + t) % 5].size() == 2)
                pairs.push_back(s.X[(i + t) % 5]);
        std::vector<int> extra = stable_transversal(g, pairs);
        if (extra.empty())
            throw StructureViolation("no stable transversal of the size-2 X-sets exists");
        VertexSet on_extra = VertexSet::of(n, extra);
        std::vector<int> color(n, -1);
        for (int t = 0; t < 5; ++t)
            color[s.c5[(i + t) % 5]] = cycle_pat[t];
        for (int t : {0, 1, 3})
            for (int x : s.X[(i + t) % 5])
                color[x] = on_extra.test(x) ? 3 : free_pat[t];
        Coloring out = make_coloring(color);
        if (!is_proper(g, out) || out.color_count != 4)
            throw StructureViolation("three-X base case produced a bad 4-coloring");
        return out;
    }

    // max |X| >= 3: peel a good stable set, recurse, and give it a new color.
    int omega = clique_number(g).size;
    std::vector<int> peel = good_stable_set(g, s);
    std::vector<int> origin;
    Graph rest = remove_vertices(g, peel, origin);
    C5Structure sub_s = classify_c5(rest, map_to_sub(origin, s.c5));
    Coloring sub = color_three_xi_case(rest, sub_s);
    std::vector<int> color(n, -1);
    for (size_t idx = 0; idx < origin.size(); ++idx)
        color[origin[idx]] = sub.colors[idx];
    for (int v : peel)
        color[v] = sub.color_count;
    Coloring out = make_coloring(color);
    if (!is_proper(g, out) || out.color_count != omega)
        throw StructureViolation("three-X recursion missed the clique-number target");
    return out;
}

Coloring color_k_colorable_case(const Graph& g, const C5Structure& s) {
    if (!s.R.empty())
        throw InputError("color_k_colorable_case: R must be empty");
    int i = anchor_position(s);
    if (i < 0)
        throw InputError("color_k_colorable_case: non-empty X-sets not at positions {i, i+1, i+3}");
    int omega = clique_number(g).size;
    if (omega < 5)
        throw InputError("color_k_colorable_case: clique number below 5");

    int n = g.vertex_count();
    if (omega == 5) {
        // Cycle vertex at position p gets color p; y_p gets p-1.
        std::vector<int> color(n, -1);
        for (int p = 0; p < 5; ++p)
            color[s.c5[p]] = p;
        for (int p = 0; p < 5; ++p)
            if (s.y(p) >= 0)
                color[s.y(p)] = (p + 4) % 5;

        // Per-X lists over the remaining compatible colors.
        ListInstance inst;
        std::array<int, 3> positions{i, (i + 1) % 5, (i + 3) % 5};
        std::vector<int> xverts;
        for (int q = 0; q < 3; ++q)
            for (int x : s.X[positions[q]])
                xverts.push_back(x);
        std::sort(xverts.begin(), xverts.end());
        auto sub = induced_subgraph(g, xverts);
        inst.graph = sub.graph;
        auto local = [&](int v) {
            auto it = std::lower_bound(sub.origin.begin(), sub.origin.end(), v);
            return static_cast<int>(it - sub.origin.begin());
        };
        for (int q = 0; q < 3; ++q) {
            int p = positions[q];
            const auto& xs = s.X[p];
            if (xs.size() > 3)
                throw StructureViolation("an X-set exceeds three vertices at clique number 5");
            for (int x : xs)
                inst.cliques[q].push_back(local(x));
            int base = (p + 3) % 5;
            inst.designated[q] = base;
            if (xs.size() <= 1) {
                inst.lists[q] = {base};
            } else if (xs.size() == 2) {
                int j;
                if (s.y(p) < 0)
                    j = p;
                else if (s.y((p + 3) % 5) < 0)
                    j = (p + 3) % 5;
                else
                    throw StructureViolation(
                        "both aligned Y vertices present beside an X-set of size 2");
                inst.lists[q] = {base, (j + 4) % 5};
            } else {
                if (s.y(p) >= 0 || s.y((p + 3) % 5) >= 0)
                    throw StructureViolation(
                        "an aligned Y vertex present beside an X-set of size 3");
                inst.lists[q] = {(p + 2) % 5, base, (p + 4) % 5};
            }
            std::sort(inst.lists[q].begin(), inst.lists[q].end());
        }
        std::vector<int> xcolors;
        try {
            xcolors = l_color_three_cliques(inst);
        } catch (const InputError& e) {
            throw StructureViolation(std::string("constructed list instance invalid: ") +
                                     e.what());
        }
        for (size_t idx = 0; idx < sub.origin.size(); ++idx)
            color[sub.origin[idx]] = xcolors[idx];
        Coloring out = make_coloring(color);
        if (!is_proper(g, out) || out.color_count != 5)
            throw StructureViolation("clique-number-5 construction missed five colors");
        return out;
    }

    std::vector<int> peel = good_stable_set(g, s);
    std::vector<int> origin;
    Graph rest = remove_vertices(g, peel, origin);
    C5Structure sub_s = classify_c5(rest, map_to_sub(origin, s.c5));
    Coloring sub = color_k_colorable_case(rest, sub_s);
    std::vector<int> color(n, -1);
    for (size_t idx = 0; idx < origin.size(); ++idx)
        color[origin[idx]] = sub.colors[idx];
    for (int v : peel)
        color[v] = sub.color_count;
    Coloring out = make_coloring(color);
    if (!is_proper(g, out) || out.color_count != omega)
        throw StructureViolation("stable-set peeling missed the clique-number target");
    return out;
}

// --- the full pipeline -------------------------------------------------------

namespace {

Coloring color_in_class(const Graph& g, const ColorOptions& options);

Coloring color_atom(const Graph& g, const ColorOptions& options) {
    int n = g.vertex_count();
    if (n <= 1)
        return trivial_coloring(n);

    if (stability_number(g).size <= 2)
        return color_alpha2(g);

    auto h5 = find_hole(g, 5);
    auto h7 = find_hole(g, 7);
    if (!h5 && !h7) {
        // No short odd hole and, inside the class, no odd antihole either:
        // the atom is perfect, so the exact solver must land on omega.
        Coloring c = exact_color(g, options.node_budget);
        if (c.color_count != clique_number(g).size)
            throw StructureViolation("perfect atom did not color with omega colors");
        return c;
    }
    if (h7) {
        if (n > 21)
            throw StructureViolation("an atom with a C7 has more than 21 vertices");
        return exact_color(g, options.node_budget);
    }

    C5Structure s = classify_c5(g, *h5);
    if (options.validate_structure) {
        auto violations = validate_claims(g, s);
        if (!violations.empty()) {
            std::ostringstream msg;
            msg << "structural claims failed:";
            for (const auto& v : violations) {
                msg << " " << to_string(v.claim) << "(";
                for (size_t k = 0; k < v.vertices.size(); ++k)
                    msg << (k ? "," : "") << v.vertices[k];
                msg << ")";
            }
            throw StructureViolation(msg.str());
        }
    }

    if (!s.R.empty()) {
        if (n > 22)
            throw StructureViolation("an atom with a 0-vertex has more than 22 vertices");
        return exact_color(g, options.node_budget);
    }

    int omega = clique_number(g).size;
    if (omega < 14)
        return exact_color(g, options.node_budget);

    int low = -1;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) <= 13) {
            low = v;
            break;
        }
    if (low >= 0) {
        std::vector<int> origin;
        Graph rest = remove_vertices(g, {low}, origin);
        Coloring sub = color_in_class(rest, options);
        std::vector<int> color(n, -1);
        for (size_t idx = 0; idx < origin.size(); ++idx)
            color[origin[idx]] = sub.colors[idx];
        std::vector<bool> seen(sub.color_count + 1, false);
        const VertexSet& nb = g.neighbors(low);
        for (int u = nb.first(); u >= 0; u = nb.next(u))
            seen[color[u]] = true;
        int c = 0;
        while (c < sub.color_count && seen[c])
            ++c;
        if (c == sub.color_count) {
            // All existing colors blocked: only possible when the recursion
            // used fewer than 14 colors, and then omega forces optimality.
            if (sub.color_count >= 14)
                throw StructureViolation("greedy extension blocked despite 14 colors");
            if (sub.color_count + 1 > omega)
                throw StructureViolation("greedy extension exceeded the clique bound");
        }
        color[low] = c;
        Coloring out = make_coloring(color);
        if (!is_proper(g, out))
            throw StructureViolation("greedy extension produced an improper coloring");
        return out;
    }

    // Minimum degree and clique number at least 14: only the three-big-X
    // shape remains.
    std::vector<int> big;
    for (int p = 0; p < 5; ++p) {
        if (s.X[p].empty())
            continue;
        if (s.X[p].size() < 3)
            throw StructureViolation("a non-empty X-set is not big in the dense regime");
        big.push_back(p);
    }
    bool pattern_ok = false;
    if (big.size() == 3)
        for (int i = 0; i < 5 && !pattern_ok; ++i) {
            std::vector<int> want{i, (i + 1) % 5, (i + 3) % 5};
            std::sort(want.begin(), want.end());
            pattern_ok = (want == big);
        }
    if (!pattern_ok)
        throw StructureViolation("big X-sets do not sit at three non-consecutive positions");
    return color_k_colorable_case(g, s);
}

Coloring color_connected(const Graph& g, const ColorOptions& options) {
    AtomTree tree = decompose(g);
    std::vector<Coloring> atom_colorings;
    for (const auto* leaf : tree.leaves()) {
        auto sub = induced_subgraph(g, leaf->vertices);
        atom_colorings.push_back(color_atom(sub.graph, options));
    }
    return recombine(g, tree, atom_colorings);
}

Coloring color_in_class(const Graph& g, const ColorOptions& options) {
    int n = g.vertex_count();
    if (n <= 1)
        return trivial_coloring(n);
    auto comps = connected_components(g);
    if (comps.size() == 1)
        return color_connected(g, options);
    std::vector<int> color(n, -1);
    int count = 0;
    for (const auto& comp : comps) {
        auto sub = induced_subgraph(g, comp);
        Coloring c = color_connected(sub.graph, options);
        for (size_t idx = 0; idx < comp.size(); ++idx)
            color[sub.origin[idx]] = c.colors[idx];
        count = std::max(count, c.color_count);
    }
    Coloring out = make_coloring(color);
    if (out.color_count != count || !is_proper(g, out))
        throw StructureViolation("component merge produced a bad coloring");
    return out;
}

} // namespace

Coloring color_class_graph(const Graph& g, const ColorOptions& options) {
    ClassCheck check = in_class(g);
    if (!check.in_class)
        throw NotInClass(*check.witness);
    Coloring out = color_in_class(g, options);
    if (!is_proper(g, out) && g.vertex_count() > 0)
        throw StructureViolation("pipeline produced an improper coloring");
    return out;
}

} // namespace hexfree
