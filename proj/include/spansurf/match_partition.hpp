#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spansurf/graph.hpp"

namespace spansurf {

// Partition of V(G) into Z, B, C, D from a maximum matching M:
// B = exposed vertices; rounds peel C_i = all matched vertices with at
// least eps*n/2 neighbours in B and earlier D's (only while at least
// eps*n/2 such vertices exist), D_i = their matching partners; Z is the
// rest of V(M). The output clauses below are asserted, not assumed.
struct MatchPartition {
    std::vector<int> z, b, c, d;          // disjoint, cover V(G)
    std::vector<Pair> matching_z;         // perfect matching on Z
    std::vector<Pair> matching_cd;        // perfect matching between C and D
    uint64_t boundary_edge_count = 0;     // |E(B u D, Z u B u D)| <= eps n^2
    int rounds = 0;
};

// Thrown when one of the asserted clauses fails. With a maximum matching
// this needs eps*n/2 <= 1: a single shared exposed neighbour then
// qualifies both endpoints of a matching edge for the same C_i. Above 1
// each qualifier has two distinct targets and the overlap would yield an
// augmenting path.
class MatchPartitionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

MatchPartition match_partition(const Graph& g, double eps);

}  // namespace spansurf
