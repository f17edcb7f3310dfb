#include "spansurf/matching.hpp"

#include <numeric>
#include <queue>

namespace spansurf {

namespace {

struct Blossom {
    const Graph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom;

    explicit Blossom(const Graph& g)
        : g(g), n(g.vertex_count()), match(n, -1), parent(n, -1), base(n), used(n, 0),
          in_blossom(n, 0) {}

    int lca(int a, int b) {
        std::vector<char> mark(n, 0);
        for (;;) {
            a = base[a];
            mark[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (mark[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        std::queue<int> q;
        q.push(root);
        used[root] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.neighbours(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // odd cycle: contract the blossom
                    int cur = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void solve() {
        // greedy seed matching
        for (int v = 0; v < n; ++v)
            if (match[v] == -1)
                for (int u : g.neighbours(v))
                    if (match[u] == -1) {
                        match[v] = u;
                        match[u] = v;
                        break;
                    }
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_path(v);
            while (u != -1) {
                int pv = parent[u], ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
    }
};

}  // namespace

std::vector<int> maximum_matching(const Graph& g) {
    Blossom b(g);
    b.solve();
    return b.match;
}

}  // namespace spansurf
