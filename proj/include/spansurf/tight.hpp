#pragma once

#include <vector>

#include "spansurf/three_graph.hpp"

namespace spansurf {

// Partition of E(H) into tight components: the transitive closure of the
// "touch" relation (two triples sharing exactly two vertices). Components
// are numbered by lexicographically smallest member triple, which makes
// the output reproducible.
struct TightPartition {
    struct Component {
        std::vector<int> edge_indices;  // ascending
        std::vector<int> vertices;      // spanned vertex set, ascending
    };
    std::vector<int> component_of;  // per edge index of the host
    std::vector<Component> components;
};

TightPartition tight_components(const ThreeGraph& h);

// Every unordered pair of touching triples, as (i, j) edge indices with
// i < j, emitted exactly once. Built from the pair->completions index:
// two completions of the same pair touch, so the work is
// sum over pairs of C(codegree, 2) instead of m^2.
std::vector<std::array<int, 2>> touching_pairs(const ThreeGraph& h);

}  // namespace spansurf
