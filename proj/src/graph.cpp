#include "spansurf/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace spansurf {

Graph::Graph(int n, std::vector<Pair> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& e : edges) {
        if (e[0] > e[1]) std::swap(e[0], e[1]);
        if (e[0] == e[1]) throw std::invalid_argument("Graph: loop edge");
        if (e[0] < 0 || e[1] >= n) throw std::invalid_argument("Graph: vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: duplicate edge");
    edges_ = std::move(edges);

    adj_.assign(n_, Bits(n_));
    nbr_.assign(n_, {});
    for (const auto& e : edges_) {
        adj_[e[0]].set(e[1]);
        adj_[e[1]].set(e[0]);
        nbr_[e[0]].push_back(e[1]);
        nbr_[e[1]].push_back(e[0]);
    }
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int m = degree(0);
    for (int v = 1; v < n_; ++v) m = std::min(m, degree(v));
    return m;
}

uint64_t count_4cycles(const Graph& g) {
    const int n = g.vertex_count();
    uint64_t twice = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            uint64_t c = Bits::and_count(g.adj_row(u), g.adj_row(v));
            twice += c * (c - 1) / 2;
        }
    return twice / 2;
}

namespace {

struct CycleDfs {
    const Graph& g;
    int length;
    uint64_t budget;
    uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<int> path;
    std::vector<char> on_path;

    CycleDfs(const Graph& g, int length, uint64_t budget)
        : g(g), length(length), budget(budget), on_path(g.vertex_count(), 0) {}

    // Cycles are enumerated from their minimal vertex `root`; the reflection
    // is broken by requiring path[1] < final vertex.
    bool extend(int root) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        int v = path.back();
        if (static_cast<int>(path.size()) == length) {
            return g.adjacent(v, root) && path[1] < v;
        }
        for (int w : g.neighbours(v)) {
            if (w <= root || on_path[w]) continue;
            path.push_back(w);
            on_path[w] = 1;
            if (extend(root)) return true;
            on_path[w] = 0;
            path.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

CycleSearch find_cycle(const Graph& g, int length, uint64_t max_nodes) {
    if (length < 3) throw std::invalid_argument("find_cycle: length must be >= 3");
    CycleSearch res;
    CycleDfs dfs(g, length, max_nodes);
    for (int root = 0; root < g.vertex_count(); ++root) {
        dfs.path = {root};
        std::fill(dfs.on_path.begin(), dfs.on_path.end(), 0);
        dfs.on_path[root] = 1;
        if (dfs.extend(root)) {
            res.verdict = Verdict::Found;
            res.cycle = dfs.path;
            res.nodes = dfs.nodes;
            return res;
        }
        if (dfs.out_of_budget) {
            res.verdict = Verdict::Indeterminate;
            res.nodes = dfs.nodes;
            return res;
        }
    }
    res.verdict = Verdict::NoneCertified;
    res.nodes = dfs.nodes;
    return res;
}

CycleSearch find_even_cycle(const Graph& g, int length, uint64_t max_nodes) {
    if (length < 4 || length % 2 != 0)
        throw std::invalid_argument("find_even_cycle: length must be even and >= 4");
    return find_cycle(g, length, max_nodes);
}

}  // namespace spansurf
