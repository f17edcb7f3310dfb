#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spansurf/graph.hpp"
#include "spansurf/three_graph.hpp"

namespace spansurf {

struct SearchBudget {
    uint64_t max_nodes = 10'000'000;
    double time_cap_secs = 60.0;
};

// Sphere search by triangulated-disk growth. State is (facet set, boundary
// cycle, used vertices); extension moves append a facet over a boundary
// edge using either a new vertex or the next boundary vertex (ear), and a
// final facet closes a triangle boundary. Every sphere triangulation is
// reachable this way from any of its facets, so iterating the first facet
// over all candidates (each taken as the lex-least facet of the witness)
// is an exhaustive, duplication-free search.
struct DiskOptions {
    std::optional<int> first_facet;     // forced seed; disables the lex-min partition
    std::optional<int> required_facet;  // witness must contain this facet
    bool spanning = true;               // witness must use every host vertex
    SearchBudget budget;
    int workers = 1;
};

struct DiskResult {
    Verdict verdict = Verdict::NoneCertified;
    std::vector<int> witness;  // facet indices into the host, ascending
    uint64_t nodes = 0;
    double secs = 0.0;
};

DiskResult disk_sphere_search(const ThreeGraph& host, const DiskOptions& opt);

}  // namespace spansurf
