#include "spansurf/three_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace spansurf {

ThreeGraph::ThreeGraph(int n, std::vector<Triple> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("ThreeGraph: negative vertex count");
    for (auto& t : edges) {
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2])
            throw std::invalid_argument("ThreeGraph: triple with repeated vertex");
        if (t[0] < 0 || t[2] >= n) throw std::invalid_argument("ThreeGraph: vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("ThreeGraph: duplicate triple");
    edges_ = std::move(edges);

    // CSR pair index: count, prefix-sum, fill.
    std::vector<int> cnt(static_cast<size_t>(n_) * n_ + 1, 0);
    auto pid = [this](int a, int b) { return static_cast<size_t>(a) * n_ + b; };
    for (const auto& t : edges_) {
        ++cnt[pid(t[0], t[1])];
        ++cnt[pid(t[0], t[2])];
        ++cnt[pid(t[1], t[2])];
    }
    pair_offset_.assign(cnt.size() + 1, 0);
    for (size_t i = 0; i < cnt.size(); ++i) pair_offset_[i + 1] = pair_offset_[i] + cnt[i];
    pair_data_.resize(edges_.size() * 3);
    std::vector<int> fill(cnt.size(), 0);
    for (const auto& t : edges_) {
        auto put = [&](int a, int b, int c) {
            size_t p = pid(a, b);
            pair_data_[pair_offset_[p] + fill[p]++] = c;
        };
        put(t[0], t[1], t[2]);
        put(t[0], t[2], t[1]);
        put(t[1], t[2], t[0]);
    }
    // Edges are lex-sorted, so each pair's completion list comes out sorted
    // except across the three insertion roles; sort per pair to be safe.
    for (size_t p = 0; p + 1 < pair_offset_.size(); ++p)
        std::sort(pair_data_.begin() + pair_offset_[p], pair_data_.begin() + pair_offset_[p + 1]);

    incident_.assign(n_, {});
    for (int i = 0; i < edge_count(); ++i)
        for (int v : edges_[i]) incident_[v].push_back(i);
}

void ThreeGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("ThreeGraph: vertex out of range");
}

std::span<const int> ThreeGraph::completions(int x, int y) const {
    if (x > y) std::swap(x, y);
    size_t p = static_cast<size_t>(x) * n_ + y;
    return {pair_data_.data() + pair_offset_[p],
            pair_data_.data() + pair_offset_[p + 1]};
}

int ThreeGraph::codegree(int x, int y) const {
    check_vertex(x);
    check_vertex(y);
    if (x == y) throw std::invalid_argument("codegree: x == y");
    return static_cast<int>(completions(x, y).size());
}

int ThreeGraph::min_codegree() const {
    if (n_ < 2) throw std::invalid_argument("min_codegree: need at least 2 vertices");
    int best = edge_count();  // upper bound
    for (int x = 0; x < n_ && best > 0; ++x)
        for (int y = x + 1; y < n_; ++y)
            best = std::min(best, static_cast<int>(completions(x, y).size()));
    return best;
}

Graph ThreeGraph::link_graph(int v) const {
    check_vertex(v);
    std::vector<Pair> es;
    for (int i : incident_[v]) {
        const Triple& t = edges_[i];
        Pair p;
        int k = 0;
        for (int w : t)
            if (w != v) p[k++] = w;
        es.push_back(p);
    }
    return Graph(n_, std::move(es));
}

int ThreeGraph::edge_index(const Triple& t) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), t);
    if (it != edges_.end() && *it == t) return static_cast<int>(it - edges_.begin());
    return -1;
}

ThreeGraph induced_subgraph(const ThreeGraph& h, const std::vector<int>& verts) {
    std::vector<int> local(h.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<Triple> es;
    for (const auto& t : h.edges()) {
        int a = local[t[0]], b = local[t[1]], c = local[t[2]];
        if (a >= 0 && b >= 0 && c >= 0) es.push_back(make_triple(a, b, c));
    }
    return ThreeGraph(static_cast<int>(verts.size()), std::move(es));
}

ThreeGraph relabel(const ThreeGraph& h, const std::vector<int>& perm) {
    std::vector<Triple> es;
    es.reserve(h.edge_count());
    for (const auto& t : h.edges()) es.push_back(make_triple(perm[t[0]], perm[t[1]], perm[t[2]]));
    return ThreeGraph(h.vertex_count(), std::move(es));
}

}  // namespace spansurf
