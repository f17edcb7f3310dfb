#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spansurf/three_graph.hpp"

namespace spansurf {

enum class EdgeColour : uint8_t { Red, Green, Uncoloured };

// Red/green/uncoloured map over E(H); colour_of is indexed by edge id.
struct EdgeColouring {
    std::vector<EdgeColour> colour_of;

    static EdgeColouring uniform(const ThreeGraph& h, EdgeColour c) {
        return {std::vector<EdgeColour>(h.edge_count(), c)};
    }
};

// Exact evaluation of the four coloured-3-graph clauses with margins:
// codegree bound, uncoloured count, cross-colour touching pairs, and the
// low-red vertex supply.
struct ColouringReport {
    int delta2 = 0;
    double codegree_needed = 0;  // (1/3 + mu) n
    bool codegree_ok = false;

    uint64_t uncoloured = 0;
    double uncoloured_cap = 0;  // eps n^3
    bool uncoloured_ok = false;

    uint64_t cross_touching = 0;
    double cross_cap = 0;  // eps n^4
    bool cross_ok = false;

    double low_red_threshold = 0;  // eps n^2 red edges
    int low_red_vertices = 0;
    double low_red_needed = 0;  // mu n / 4
    bool low_red_ok = false;

    bool all_ok = false;
};

ColouringReport check_colouring(const ThreeGraph& h, const EdgeColouring& c, double eps,
                                double mu);

// Graph on V minus {v} (v isolated) with xy an edge iff vxy is green.
Graph green_link(const ThreeGraph& h, const EdgeColouring& c, int v);

// Colour-merging procedure: starting from an edge partition (tight
// components by default), repeatedly merge the colour pair with the most
// touching cross pairs while some pair has at least merge_threshold of
// them (ties broken towards the lexicographically smaller pair of colour
// ids). Distinct tight components never touch, so the default start is
// already stable; the explicit-initial overload exists for colourings that
// do interact.
struct MergeEvent {
    int colour_a = 0;
    int colour_b = 0;
    uint64_t touching_count = 0;
};

struct MergeResult {
    std::vector<int> raw_colour_of;  // final colour ids per edge
    EdgeColouring colouring;         // two largest colours -> Green/Red, rest Uncoloured
    std::vector<MergeEvent> log;
    int final_colour_count = 0;
};

MergeResult merge_colouring(const ThreeGraph& h, uint64_t merge_threshold);
MergeResult merge_colouring(const ThreeGraph& h, uint64_t merge_threshold,
                            const std::vector<int>& initial_colour_of);

}  // namespace spansurf
