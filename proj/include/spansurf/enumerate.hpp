#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "spansurf/three_graph.hpp"

namespace spansurf {

// Exhaustive enumeration of closed subcomplexes (every skeleton pair in 0
// or 2 chosen facets) of a host 3-graph, grown from a seed facet. The
// branching driver is the lexicographically least open pair: a closed
// complex needs exactly one more facet through it, so the subtrees of the
// candidate completions are disjoint and every closed complex containing
// the seed is visited exactly once.
//
// With forbid_below_seed set, only facets with index >= seed are used;
// iterating seeds ascending then partitions all closed complexes by their
// least facet.
struct EnumLimits {
    uint64_t max_nodes = 10'000'000;
    double time_cap_secs = 60.0;
};

struct EnumStats {
    uint64_t nodes = 0;
    bool complete = true;  // ran to exhaustion (not stopped by caps/callback)
    bool stopped_by_callback = false;
};

// callback receives the chosen facet indices (ascending); return true to
// stop the whole enumeration.
using ClosedComplexCallback = std::function<bool(const std::vector<int>&)>;

EnumStats enumerate_closed_complexes(const ThreeGraph& host, int seed_facet,
                                     bool forbid_below_seed, int max_facets,
                                     const EnumLimits& limits,
                                     const ClosedComplexCallback& on_closed);

// Seeds ascending over all host facets with the lex-min partition; every
// closed subcomplex of the host with at most max_facets facets is reported
// exactly once.
EnumStats enumerate_all_closed_complexes(const ThreeGraph& host, int max_facets,
                                         const EnumLimits& limits,
                                         const ClosedComplexCallback& on_closed);

}  // namespace spansurf
