#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "spansurf/bits.hpp"

namespace spansurf {

using Pair = std::array<int, 2>;  // sorted: first < second

// Simple undirected graph on vertices 0..n-1, no loops, no multi-edges.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Pair> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Pair>& edges() const { return edges_; }

    bool adjacent(int a, int b) const { return adj_[a].test(b); }
    int degree(int v) const { return static_cast<int>(nbr_[v].size()); }
    const std::vector<int>& neighbours(int v) const { return nbr_[v]; }
    const Bits& adj_row(int v) const { return adj_[v]; }

    int min_degree() const;

private:
    int n_ = 0;
    std::vector<Pair> edges_;       // sorted lexicographically
    std::vector<Bits> adj_;
    std::vector<std::vector<int>> nbr_;
};

// Exact number of 4-cycle subgraphs: half the sum over vertex pairs of
// C(#common neighbours, 2), since each C4 is counted once per diagonal.
uint64_t count_4cycles(const Graph& g);

enum class Verdict { Found, NoneCertified, Indeterminate };

struct CycleSearch {
    Verdict verdict = Verdict::NoneCertified;
    std::vector<int> cycle;  // vertices in cyclic order when found
    uint64_t nodes = 0;
};

// Search for a simple cycle of exactly `length` vertices. A NoneCertified
// verdict is only issued when the search ran to completion; hitting the
// expansion budget yields Indeterminate instead.
CycleSearch find_cycle(const Graph& g, int length, uint64_t max_nodes = 10'000'000);

// Even-cycle entry point (length 2k, 2k >= 4).
CycleSearch find_even_cycle(const Graph& g, int length, uint64_t max_nodes = 10'000'000);

}  // namespace spansurf
