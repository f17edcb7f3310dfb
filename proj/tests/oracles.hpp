#pragma once

// Test-side brute-force oracles. These stay deliberately naive and
// independent of the library's indexed implementations.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "spansurf/bits.hpp"
#include "spansurf/graph.hpp"
#include "spansurf/three_graph.hpp"

namespace oracles {

using spansurf::Graph;
using spansurf::Pair;
using spansurf::Rng;
using spansurf::ThreeGraph;
using spansurf::Triple;

inline int brute_codegree(const ThreeGraph& h, int x, int y) {
    int c = 0;
    for (const auto& t : h.edges()) {
        bool hx = false, hy = false;
        for (int v : t) {
            if (v == x) hx = true;
            if (v == y) hy = true;
        }
        if (hx && hy) ++c;
    }
    return c;
}

inline uint64_t brute_4cycles(const Graph& g) {
    const int n = g.vertex_count();
    uint64_t c = 0;
    // ordered 4-tuples forming a cycle, divided by the 8 symmetries
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (a == b || a == x || a == y || b == x || b == y || x == y) continue;
                    if (g.adjacent(a, b) && g.adjacent(b, x) && g.adjacent(x, y) &&
                        g.adjacent(y, a))
                        ++c;
                }
    return c / 8;
}

inline uint64_t brute_touching_pairs(const ThreeGraph& h) {
    uint64_t c = 0;
    for (int i = 0; i < h.edge_count(); ++i)
        for (int j = i + 1; j < h.edge_count(); ++j) {
            int shared = 0;
            for (int x : h.edge(i))
                for (int y : h.edge(j))
                    if (x == y) ++shared;
            if (shared == 2) ++c;
        }
    return c;
}

// maximum matching size by exhaustive branching on the first coverable vertex
inline int brute_max_matching_size(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> used(n, 0);
    std::function<int()> rec = [&]() -> int {
        int v = -1;
        for (int i = 0; i < n; ++i)
            if (!used[i]) {
                bool any = false;
                for (int u : g.neighbours(i))
                    if (!used[u]) any = true;
                if (any) {
                    v = i;
                    break;
                }
            }
        if (v < 0) return 0;
        // either v stays unmatched ...
        used[v] = 1;
        int best = rec();
        // ... or v is matched to some free neighbour
        for (int u : g.neighbours(v)) {
            if (used[u]) continue;
            used[u] = 1;
            best = std::max(best, 1 + rec());
            used[u] = 0;
        }
        used[v] = 0;
        return best;
    };
    return rec();
}

inline ThreeGraph random_three_graph(Rng& rng, int n, double p) {
    std::vector<Triple> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (rng.unit() < p) es.push_back({a, b, c});
    return ThreeGraph(n, std::move(es));
}

inline Graph random_graph(Rng& rng, int n, double p) {
    std::vector<Pair> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.unit() < p) es.push_back({a, b});
    return Graph(n, std::move(es));
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
    return p;
}

// true iff the given edge set forms one cycle covering all its vertices
inline bool is_single_cycle(const Graph& g, const std::vector<int>& verts) {
    if (verts.size() < 3) return false;
    for (int v : verts)
        if (g.degree(v) != 2) return false;
    // walk
    int start = verts[0], prev = -1, cur = start;
    size_t seen = 0;
    do {
        ++seen;
        auto& nb = g.neighbours(cur);
        int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    } while (cur != start && seen <= verts.size());
    return seen == verts.size();
}

}  // namespace oracles
