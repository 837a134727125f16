#include "hexfree/c5_structure.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace hexfree {

std::vector<int> C5Structure::all_x() const {
    std::vector<int> out;
    for (const auto& xs : X)
        out.insert(out.end(), xs.begin(), xs.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> C5Structure::all_y() const {
    std::vector<int> out;
    for (const auto& ys : Y)
        out.insert(out.end(), ys.begin(), ys.end());
    std::sort(out.begin(), out.end());
    return out;
}

int C5Structure::y(int i) const {
    const auto& ys = Y[((i % 5) + 5) % 5];
    return ys.empty() ? -1 : ys.front();
}

namespace {

void require_induced_cycle(const Graph& g, const std::vector<int>& cyc, int k) {
    if (static_cast<int>(cyc.size()) != k)
        throw InputError("expected a cycle on " + std::to_string(k) + " vertices");
    for (int v : cyc)
        if (v < 0 || v >= g.vertex_count())
            throw InputError("cycle vertex out of range");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (cyc[i] == cyc[j])
                throw InputError("cycle vertices not distinct");
            bool consecutive = (j - i == 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cyc[i], cyc[j]) != consecutive)
                throw InputError("vertex list is not an induced cycle");
        }
}

[[noreturn]] void unclassifiable(const Graph& g, const std::vector<int>& cyc, int v,
                                 unsigned mask) {
    std::ostringstream msg;
    msg << "vertex " << v << " has no legal attachment to the cycle; cycle neighbors:";
    for (size_t p = 0; p < cyc.size(); ++p)
        if (mask >> p & 1)
            msg << " " << cyc[p];
    msg << " (graph is outside the class or the cycle is wrong)";
    (void)g;
    throw StructureViolation(msg.str());
}

} // namespace

C5Structure classify_c5(const Graph& g, const std::vector<int>& c5) {
    require_induced_cycle(g, c5, 5);
    C5Structure s;
    s.c5 = c5;
    VertexSet on_cycle = VertexSet::of(g.vertex_count(), c5);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (on_cycle.test(v))
            continue;
        unsigned mask = 0;
        for (int p = 0; p < 5; ++p)
            if (g.adjacent(v, c5[p]))
                mask |= 1u << p;
        int deg = std::popcount(mask);
        if (deg == 0) {
            s.R.push_back(v);
        } else if (deg == 2) {
            int p = -1;
            for (int i = 0; i < 5; ++i)
                if ((mask >> i & 1) && (mask >> ((i + 1) % 5) & 1))
                    p = i;
            if (p < 0)
                unclassifiable(g, c5, v, mask);
            s.X[p].push_back(v);
        } else if (deg == 4) {
            int missing = std::countr_zero(~mask & 0x1f);
            s.Y[(missing + 1) % 5].push_back(v);
        } else {
            unclassifiable(g, c5, v, mask);
        }
    }
    return s;
}

C7Structure classify_c7(const Graph& g, const std::vector<int>& c7) {
    require_induced_cycle(g, c7, 7);
    C7Structure s;
    s.c7 = c7;
    VertexSet on_cycle = VertexSet::of(g.vertex_count(), c7);
    auto rot = [](unsigned pattern, int i) {
        unsigned wide = (pattern << i) | (pattern >> (7 - i));
        return wide & 0x7fu;
    };
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (on_cycle.test(v))
            continue;
        unsigned mask = 0;
        for (int p = 0; p < 7; ++p)
            if (g.adjacent(v, c7[p]))
                mask |= 1u << p;
        bool placed = false;
        for (int i = 0; i < 7 && !placed; ++i) {
            if (mask == rot(0b0001111u, i)) { // {i, i+1, i+2, i+3}
                s.Y[i].push_back(v);
                placed = true;
            } else if (mask == rot(0b0011011u, i)) { // {i, i+1, i+3, i+4}
                s.Z[i].push_back(v);
                placed = true;
            }
        }
        if (!placed)
            unclassifiable(g, c7, v, mask);
    }
    return s;
}

std::string to_string(ClaimId id) {
    switch (id) {
    case ClaimId::y_unique: return "y_unique";
    case ClaimId::consecutive_y_nonadjacent: return "consecutive_y_nonadjacent";
    case ClaimId::x_joins_aligned_y: return "x_joins_aligned_y";
    case ClaimId::aligned_y_pair_adjacent: return "aligned_y_pair_adjacent";
    case ClaimId::x_avoids_misaligned_y: return "x_avoids_misaligned_y";
    case ClaimId::r_avoids_y: return "r_avoids_y";
    case ClaimId::r_needs_x: return "r_needs_x";
    case ClaimId::x_set_clique: return "x_set_clique";
    case ClaimId::r_clique: return "r_clique";
    case ClaimId::r_joins_x: return "r_joins_x";
    case ClaimId::r_caps_x_size: return "r_caps_x_size";
    case ClaimId::x_cross_degree_one: return "x_cross_degree_one";
    case ClaimId::x_cross_neighbors_adjacent: return "x_cross_neighbors_adjacent";
    case ClaimId::small_r_or_x_cutset: return "small_r_or_x_cutset";
    case ClaimId::big_x_flattens_neighbors: return "big_x_flattens_neighbors";
    }
    return "?";
}

std::vector<ClaimViolation> validate_claims(const Graph& g, const C5Structure& s) {
    std::vector<ClaimViolation> out;
    auto report = [&](ClaimId id, std::vector<int> verts) {
        out.push_back(ClaimViolation{id, std::move(verts)});
    };

    for (int i = 0; i < 5; ++i)
        if (s.Y[i].size() > 1)
            report(ClaimId::y_unique, {s.Y[i][0], s.Y[i][1]});

    for (int i = 0; i < 5; ++i)
        for (int a : s.Y[i])
            for (int b : s.Y[(i + 1) % 5])
                if (g.adjacent(a, b))
                    report(ClaimId::consecutive_y_nonadjacent, {a, b});

    for (int i = 0; i < 5; ++i)
        for (int x : s.X[i])
            for (int j : {i, (i + 3) % 5})
                for (int y : s.Y[j])
                    if (!g.adjacent(x, y))
                        report(ClaimId::x_joins_aligned_y, {x, y});

    for (int i = 0; i < 5; ++i) {
        if (s.X[i].empty())
            continue;
        int yi = s.y(i), yj = s.y(i + 3);
        if (yi >= 0 && yj >= 0 && !g.adjacent(yi, yj))
            report(ClaimId::aligned_y_pair_adjacent, {s.X[i][0], yi, yj});
    }

    for (int i = 0; i < 5; ++i)
        for (int x : s.X[i])
            for (int j : {(i + 1) % 5, (i + 2) % 5, (i + 4) % 5})
                for (int y : s.Y[j])
                    if (g.adjacent(x, y))
                        report(ClaimId::x_avoids_misaligned_y, {x, y});

    for (int r : s.R)
        for (int y : s.all_y())
            if (g.adjacent(r, y))
                report(ClaimId::r_avoids_y, {r, y});

    if (!s.R.empty() && s.all_x().empty() && is_connected(g))
        report(ClaimId::r_needs_x, {s.R.front()});

    for (int i = 0; i < 5; ++i)
        for (size_t a = 0; a < s.X[i].size(); ++a)
            for (size_t b = a + 1; b < s.X[i].size(); ++b)
                if (!g.adjacent(s.X[i][a], s.X[i][b]))
                    report(ClaimId::x_set_clique, {s.X[i][a], s.X[i][b]});

    for (size_t a = 0; a < s.R.size(); ++a)
        for (size_t b = a + 1; b < s.R.size(); ++b)
            if (!g.adjacent(s.R[a], s.R[b]))
                report(ClaimId::r_clique, {s.R[a], s.R[b]});

    for (int r : s.R)
        for (int i = 0; i < 5; ++i)
            for (int x : s.X[i])
                if (!g.adjacent(r, x))
                    report(ClaimId::r_joins_x, {r, x});

    if (!s.R.empty())
        for (int i = 0; i < 5; ++i)
            if (s.X[i].size() > 2)
                report(ClaimId::r_caps_x_size,
                       {s.R.front(), s.X[i][0], s.X[i][1], s.X[i][2]});

    for (int i = 0; i < 5; ++i)
        for (int x : s.X[i])
            for (int j = 0; j < 5; ++j) {
                if (j == i)
                    continue;
                std::vector<int> nbrs;
                for (int u : s.X[j])
                    if (g.adjacent(x, u))
                        nbrs.push_back(u);
                if (nbrs.size() >= 2)
                    report(ClaimId::x_cross_degree_one, {x, nbrs[0], nbrs[1]});
            }

    for (int i = 0; i < 5; ++i)
        for (int x : s.X[i]) {
            std::vector<int> nbrs;
            for (int j = 0; j < 5; ++j) {
                if (j == i)
                    continue;
                for (int u : s.X[j])
                    if (g.adjacent(x, u))
                        nbrs.push_back(u);
            }
            for (size_t a = 0; a < nbrs.size(); ++a)
                for (size_t b = a + 1; b < nbrs.size(); ++b)
                    if (!g.adjacent(nbrs[a], nbrs[b]))
                        report(ClaimId::x_cross_neighbors_adjacent, {x, nbrs[a], nbrs[b]});
        }

    std::vector<int> all_x = s.all_x();
    if (!all_x.empty() && s.R.size() >= 3) {
        bool cutset = is_clique(g, all_x);
        if (cutset) {
            VertexSet rest(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v)
                rest.set(v);
            for (int x : all_x)
                rest.reset(x);
            cutset = components_within(g, rest).size() >= 2;
        }
        if (!cutset) {
            std::vector<int> verts(s.R.begin(), s.R.begin() + 3);
            verts.insert(verts.end(), all_x.begin(), all_x.end());
            report(ClaimId::small_r_or_x_cutset, verts);
        }
    }

    for (int i = 0; i < 5; ++i) {
        int a = i, b = (i + 1) % 5, c = (i + 2) % 5;
        if (s.X[a].empty() || s.X[b].empty() || s.X[c].empty())
            continue;
        for (int j : {a, b, c})
            if (s.X[j].size() >= 3)
                for (int k : {a, b, c})
                    if (k != j && s.X[k].size() != 1)
                        report(ClaimId::big_x_flattens_neighbors,
                               {s.X[j][0], s.X[k][0], s.X[k][1]});
    }

    return out;
}

} // namespace hexfree
