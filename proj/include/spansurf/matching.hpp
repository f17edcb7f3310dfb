#pragma once

#include <vector>

#include "spansurf/graph.hpp"

namespace spansurf {

// Maximum cardinality matching in a general graph (augmenting paths with
// blossom shrinking, O(V^3)). Returns mate[v] with -1 for exposed vertices.
// match_partition needs a true maximum matching, not a merely maximal one:
// its output clauses fail on inclusion-maximal matchings.
std::vector<int> maximum_matching(const Graph& g);

}  // namespace spansurf
