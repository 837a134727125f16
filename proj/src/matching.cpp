#include "hexfree/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace hexfree {

namespace {

// Search state for one augmenting-path scan. `base[v]` is the base vertex of
// the contracted blossom containing v, `parent[v]` the traversal parent of an
// odd vertex, `mate[v]` the current matching.
struct BlossomSearch {
    const Graph& g;
    int n;
    std::vector<int> mate, parent, base;
    std::vector<bool> seen, in_blossom;

    explicit BlossomSearch(const Graph& graph)
        : g(graph),
          n(graph.vertex_count()),
          mate(n, -1),
          parent(n),
          base(n),
          seen(n),
          in_blossom(n) {}

    int lowest_common_base(int a, int b) {
        std::vector<bool> on_path(n, false);
        int cur = a;
        while (true) {
            cur = base[cur];
            on_path[cur] = true;
            if (mate[cur] == -1)
                break;
            cur = parent[mate[cur]];
        }
        cur = b;
        while (true) {
            cur = base[cur];
            if (on_path[cur])
                return cur;
            cur = parent[mate[cur]];
        }
    }

    void mark_blossom_path(int v, int stop_base, int child) {
        while (base[v] != stop_base) {
            in_blossom[base[v]] = true;
            in_blossom[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    // Returns an exposed vertex reachable from root by an alternating path,
    // with parent[] describing the path, or -1.
    int find_augmenting_path(int root) {
        std::fill(seen.begin(), seen.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        seen[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            const VertexSet& nb = g.neighbors(v);
            for (int to = nb.first(); to >= 0; to = nb.next(to)) {
                if (base[v] == base[to] || mate[v] == to)
                    continue;
                if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
                    // Even-even edge closes an odd cycle: contract the blossom.
                    int cur_base = lowest_common_base(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), false);
                    mark_blossom_path(v, cur_base, to);
                    mark_blossom_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!seen[i]) {
                                seen[i] = true;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (mate[to] == -1)
                        return to;
                    seen[mate[to]] = true;
                    q.push(mate[to]);
                }
            }
        }
        return -1;
    }

    void augment(int exposed) {
        int v = exposed;
        while (v != -1) {
            int pv = parent[v];
            int next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }

    void run() {
        // Greedy seed matching cuts down the number of scans.
        for (int v = 0; v < n; ++v) {
            if (mate[v] != -1)
                continue;
            const VertexSet& nb = g.neighbors(v);
            for (int u = nb.first(); u >= 0; u = nb.next(u))
                if (mate[u] == -1) {
                    mate[v] = u;
                    mate[u] = v;
                    break;
                }
        }
        for (int v = 0; v < n; ++v)
            if (mate[v] == -1) {
                int exposed = find_augmenting_path(v);
                if (exposed != -1)
                    augment(exposed);
            }
    }
};

} // namespace

Matching max_matching(const Graph& g) {
    BlossomSearch search(g);
    search.run();
    Matching m;
    for (int v = 0; v < search.n; ++v)
        if (search.mate[v] > v)
            m.edges.emplace_back(v, search.mate[v]);
    return m;
}

} // namespace hexfree
