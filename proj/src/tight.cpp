#include "spansurf/tight.hpp"

#include <algorithm>
#include <numeric>

namespace spansurf {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        int root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            int next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<int> parent_;
    std::vector<uint8_t> rank_;
};

}  // namespace

TightPartition tight_components(const ThreeGraph& h) {
    const int m = h.edge_count();
    UnionFind uf(m);

    // All completions of one pair are mutually touching; chaining the first
    // to the rest is enough for the union-find closure.
    const int n = h.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto comp = h.completions(a, b);
            if (comp.size() < 2) continue;
            int first = h.edge_index(make_triple(a, b, comp[0]));
            for (size_t k = 1; k < comp.size(); ++k)
                uf.unite(first, h.edge_index(make_triple(a, b, comp[k])));
        }

    TightPartition part;
    part.component_of.assign(m, -1);
    // Edges are lex-sorted, so scanning ascending assigns component ids in
    // order of lexicographically smallest member triple.
    std::vector<int> root_to_id;
    std::vector<int> id_of_root(m, -1);
    for (int i = 0; i < m; ++i) {
        int r = uf.find(i);
        if (id_of_root[r] < 0) {
            id_of_root[r] = static_cast<int>(part.components.size());
            part.components.emplace_back();
        }
        int id = id_of_root[r];
        part.component_of[i] = id;
        part.components[id].edge_indices.push_back(i);
    }
    for (auto& c : part.components) {
        for (int i : c.edge_indices)
            for (int v : h.edge(i)) c.vertices.push_back(v);
        std::sort(c.vertices.begin(), c.vertices.end());
        c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()), c.vertices.end());
    }
    return part;
}

std::vector<std::array<int, 2>> touching_pairs(const ThreeGraph& h) {
    std::vector<std::array<int, 2>> out;
    const int n = h.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto comp = h.completions(a, b);
            for (size_t i = 0; i < comp.size(); ++i) {
                int ei = h.edge_index(make_triple(a, b, comp[i]));
                for (size_t j = i + 1; j < comp.size(); ++j) {
                    int ej = h.edge_index(make_triple(a, b, comp[j]));
                    out.push_back({std::min(ei, ej), std::max(ei, ej)});
                }
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace spansurf
