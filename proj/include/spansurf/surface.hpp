#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spansurf/three_graph.hpp"

namespace spansurf {

// Pure 2-dimensional simplicial complex given by its facet list. Vertices
// are arbitrary non-negative integers; the 0- and 1-skeletons are derived.
class Complex {
public:
    Complex() = default;
    explicit Complex(std::vector<Triple> facets);

    const std::vector<Triple>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }
    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Pair>& pairs() const { return pairs_; }

    bool has_facet(const Triple& t) const;

private:
    std::vector<Triple> facets_;  // sorted, unique
    std::vector<int> vertices_;   // sorted
    std::vector<Pair> pairs_;     // sorted
};

// Classification record per the closed-surface classification theorem:
// the pair (Euler characteristic, orientability) determines the surface.
struct SurfaceType {
    int euler = 2;
    bool orientable = true;

    // "sphere", "torus-sum(g)" with g = (2-chi)/2, or "projective-sum(k)"
    // with k = 2-chi.
    std::string name() const;
    // Friendlier alias: torus-sum(1) -> "torus", projective-sum(1) ->
    // "projective-plane", otherwise the canonical name.
    std::string display_name() const;

    static SurfaceType make(int euler, bool orientable);  // validates parity/range
    static SurfaceType sphere() { return {2, true}; }
    static SurfaceType torus() { return {0, true}; }
    static SurfaceType projective_plane() { return {1, false}; }

    bool operator==(const SurfaceType& o) const = default;
};

// Decision-with-certificate for the closed-surface recognition predicate:
//   (a) every pair of the skeleton lies in exactly 2 facets,
//   (b) every vertex link is a single cycle of length >= 3,
//   (c) the facet adjacency graph (shared pairs) is connected.
// Vertex links that split into several cycles are rejected: the objects of
// interest are genuine surfaces, not pseudo-surfaces.
struct SurfaceCheck {
    enum class Failure { None, PairDegree, VertexLink, Disconnected };
    bool closed = false;
    Failure failure = Failure::None;
    Pair witness_pair{-1, -1};  // PairDegree: pair with facet count != 2
    int witness_vertex = -1;    // VertexLink: offending vertex
    int witness_facet = -1;     // Disconnected: facet outside the first part
    std::string describe() const;
};

SurfaceCheck is_closed_surface(const Complex& k);  // throws on empty complex

// V - E + F on the derived skeletons (any complex, no surface assumption).
int euler_characteristic(const Complex& k);

// Orientation propagation across shared pairs demanding opposite traversal;
// contract: only call on an accepted closed surface.
bool orientability(const Complex& k);

SurfaceType classify(const Complex& k);  // contract: closed surface

// True iff the 0-skeleton of K is all of 0..n-1. Every facet must be an
// edge of the host (a copy must use edges of H), else invalid-argument.
bool spans(const Complex& k, const ThreeGraph& h);

// Connected sum along a shared-facet tube: the result is the symmetric
// difference of the three facet sets. When the inputs are closed surfaces
// the output is one as well, with chi = chi(k1) + chi(k2) - 2.
Complex connected_sum_glue(const Complex& k1, const Complex& k2, const Complex& tube,
                           const Triple& removed_from_k1, const Triple& removed_from_k2);

}  // namespace spansurf
