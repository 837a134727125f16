#ifndef HEXFREE_ORACLE_HPP
#define HEXFREE_ORACLE_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "hexfree/coloring.hpp"
#include "hexfree/graph.hpp"

namespace hexfree {

// Brute-force ground truth. Deliberately plain code sharing nothing with the
// production solvers: plain backtracking in index order, no clique seeding,
// no saturation heuristics. Size guards fail loudly.

/// Exact chromatic number by k-colorability backtracking, k ascending from an
/// exhaustively computed clique bound. Guard: n <= 14.
int brute_chromatic(const Graph& g);

/// Exact chromatic index via the chromatic number of a locally built line
/// graph. Guard: at most 20 edges.
int brute_edge_chromatic(const Graph& g);

/// Exhaustive search for a list-respecting proper coloring of a three-clique
/// instance; nullopt iff unsatisfiable. Guard: at most 12 vertices total.
std::optional<std::vector<int>> brute_list_color(const ListInstance& inst);

/// Maximum matching size by include/exclude over the edge set. Guard: at
/// most 20 edges.
int brute_max_matching(const Graph& g);

/// Exhaustive maximum clique / stable set sizes. Guard: n <= 20.
int brute_clique_number(const Graph& g);
int brute_stability_number(const Graph& g);

// --- class-member generator --------------------------------------------------

enum class GenStrategy { exhaustive_labeled, random_filtered, constructive_c5 };

/// Same spec and seed always yield the same graph sequence.
struct GenSpec {
    int n_min = 4;
    int n_max = 8;
    uint64_t seed = 1;
    GenStrategy strategy = GenStrategy::random_filtered;
};

/// Explicit C5 neighborhood shape: X-set sizes and Y flags per position,
/// an R clique joined to all of X, seeded optional cross edges. The result
/// honors the forced structure but is not guaranteed to be in the class;
/// callers filter.
struct C5ShapeSpec {
    std::array<int, 5> x_sizes{0, 0, 0, 0, 0};
    std::array<bool, 5> y_present{false, false, false, false, false};
    int r_size = 0;
    uint64_t seed = 1;
    double cross_edge_prob = 0.3; // X_i to X_j partial matchings
    double yy_edge_prob = 0.5;    // optional edges between compatible Y pairs
};

Graph build_c5_shape(const C5ShapeSpec& shape);

/// Stream of class members. exhaustive_labeled walks every labeled graph
/// with n_min <= n <= n_max <= 7 and keeps the members; the random
/// strategies rejection-sample (next() gives up after a trial budget and
/// returns nullopt, so infeasible specs terminate).
class Generator {
public:
    explicit Generator(GenSpec spec);
    std::optional<Graph> next();

private:
    GenSpec spec_;
    uint64_t rng_state_;
    int exh_n_;
    uint64_t exh_mask_;

    uint64_t next_u64();
    int below(int n);
    bool chance(double p);
    std::optional<Graph> next_exhaustive();
    std::optional<Graph> next_random();
    std::optional<Graph> next_constructive();
};

} // namespace hexfree

#endif
