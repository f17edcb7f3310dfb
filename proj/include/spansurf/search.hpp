#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spansurf/disk_search.hpp"
#include "spansurf/surface.hpp"
#include "spansurf/three_graph.hpp"
#include "spansurf/tight.hpp"

namespace spansurf {

struct SearchOutcome {
    Verdict verdict = Verdict::NoneCertified;
    std::optional<Complex> witness;
    uint64_t nodes = 0;
    double secs = 0.0;
    bool exhaustive = false;  // ran to natural completion
};

// Spanning sphere by disk growth, restricted to the spanning tight
// components (a copy of a surface lies inside a single tight component,
// so hosts without a spanning component certify none immediately).
SearchOutcome find_spanning_sphere(const ThreeGraph& h, SearchBudget budget = {},
                                   int workers = 1);

// Spanning copy of a given surface; nullopt target accepts any closed
// surface. Sphere targets reuse the disk engine; other targets run the
// facet-subset enumerator with the 2n-2chi facet filter.
SearchOutcome find_spanning_surface(const ThreeGraph& h, std::optional<SurfaceType> target,
                                    SearchBudget budget = {}, int workers = 1);

// Double pyramid with apexes from apex_pool over a cycle of length
// cycle_len: apex pairs are tried by descending common-link edge count,
// searching each common link graph for the cycle.
SearchOutcome find_double_pyramid(const ThreeGraph& h, const std::vector<int>& apex_pool,
                                  int cycle_len, SearchBudget budget = {});

// For l = 1..l_max, the exact number of l-sets A (disjoint from e and f)
// such that some sphere with vertex set V(e) u V(f) u A contains both e
// and f; plus, per l, a greedily extracted pairwise-disjoint family of
// witness sets. Maximality gives count <= |family| * l * n^(l-1), which is
// checked rather than assumed.
struct CensusResult {
    std::vector<uint64_t> counts;                          // index l-1
    std::vector<std::vector<std::vector<int>>> families;   // index l-1
    std::vector<bool> family_bound_ok;                     // index l-1
    bool exhaustive = true;
    uint64_t nodes = 0;
};

CensusResult connectibility_census(const ThreeGraph& h, const Triple& e, const Triple& f,
                                   int l_max, SearchBudget budget = {});

// e and f touch along {u,v}; counts the pairs {w,z} closing a 4-cycle
// through uv in the auxiliary graph G_{x,y} (pq an edge iff pqx and pqy
// are both host edges). Each such pair yields the 6-vertex double-pyramid
// sphere on {x,y,u,v,w,z} containing e and f.
uint64_t touching_sphere_count(const ThreeGraph& h, const Triple& e, const Triple& f);

// Bipartite-sphere construction: pick a 4k-set K of B maximising the
// common triangle 3-graph of the link graphs, find a double pyramid on
// 2k+2 A-vertices inside it, then cone one K vertex into each of the 4k
// faces. Certifies none only when all K choices are exhaustible.
SearchOutcome find_bipartite_sphere(const ThreeGraph& h, const std::vector<int>& a_side,
                                    const std::vector<int>& b_side, int k,
                                    SearchBudget budget = {},
                                    std::optional<uint64_t> seed = std::nullopt);

// Maximum 0-skeleton size over all closed-surface subcomplexes, searched
// per tight component. Budget exhaustion downgrades the result to a lower
// bound (exhaustive == false).
struct CoverResult {
    int max_cover = 0;
    std::optional<Complex> witness;
    bool exhaustive = true;
    uint64_t nodes = 0;
};

CoverResult max_surface_cover(const ThreeGraph& h, SearchBudget budget = {});

}  // namespace spansurf
