#pragma once

#include <array>
#include <span>
#include <vector>

#include "spansurf/graph.hpp"

namespace spansurf {

using Triple = std::array<int, 3>;  // sorted ascending

inline Triple make_triple(int a, int b, int c) {
    Triple t{a, b, c};
    if (t[0] > t[1]) std::swap(t[0], t[1]);
    if (t[1] > t[2]) std::swap(t[1], t[2]);
    if (t[0] > t[1]) std::swap(t[0], t[1]);
    return t;
}

// 3-uniform hypergraph on vertices 0..n-1. Immutable after construction;
// a pair -> completing-vertices index is built up front so that codegree,
// link and touching queries are all index lookups.
class ThreeGraph {
public:
    ThreeGraph() = default;
    ThreeGraph(int n, std::vector<Triple> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Triple>& edges() const { return edges_; }
    const Triple& edge(int i) const { return edges_[i]; }

    // |{z : xyz in E}|; x != y, both in range.
    int codegree(int x, int y) const;

    // min over all unordered vertex pairs; requires n >= 2.
    int min_codegree() const;

    // Graph on the same vertex numbering with xy an edge iff vxy in E;
    // v itself is isolated in the result.
    Graph link_graph(int v) const;

    // Sorted completing vertices of the pair {x,y} (empty when none).
    std::span<const int> completions(int x, int y) const;

    bool has_edge(const Triple& t) const { return edge_index(t) >= 0; }
    int edge_index(const Triple& t) const;  // -1 when absent

    const std::vector<int>& edges_at(int v) const { return incident_[v]; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Triple> edges_;              // sorted lexicographically, unique
    std::vector<int> pair_offset_;           // size n*n+1, CSR over pair ids a*n+b
    std::vector<int> pair_data_;             // completions, grouped per pair
    std::vector<std::vector<int>> incident_; // vertex -> incident edge indices
};

// Host restricted to a sorted vertex subset, relabelled to 0..|verts|-1.
ThreeGraph induced_subgraph(const ThreeGraph& h, const std::vector<int>& verts);

// Image of h under the permutation perm (vertex v becomes perm[v]).
ThreeGraph relabel(const ThreeGraph& h, const std::vector<int>& perm);

}  // namespace spansurf
