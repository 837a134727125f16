#ifndef HEXFREE_MATCHING_HPP
#define HEXFREE_MATCHING_HPP

#include "hexfree/graph.hpp"

namespace hexfree {

/// Maximum-cardinality matching in a general graph, by repeated augmenting
/// path search with blossom contraction. O(n^3).
Matching max_matching(const Graph& g);

} // namespace hexfree

#endif
