#include "spansurf/enumerate.hpp"

#include <algorithm>

namespace spansurf {

namespace {

struct Enumerator {
    const ThreeGraph& h;
    int n;
    bool lexmin;
    int seed;
    int max_facets;
    EnumLimits limits;
    const ClosedComplexCallback& cb;
    std::chrono::steady_clock::time_point deadline;

    std::vector<uint8_t> usage;     // pair id a*n+b -> facets chosen through it
    std::vector<char> chosen;       // per edge id
    std::vector<int> chosen_list;   // ascending insertion, sorted on report
    std::vector<Pair> open_pairs;   // usage-1 pairs, unordered stack
    EnumStats stats;
    bool stop = false;

    Enumerator(const ThreeGraph& h, int seed, bool lexmin, int max_facets,
               const EnumLimits& limits, const ClosedComplexCallback& cb)
        : h(h), n(h.vertex_count()), lexmin(lexmin), seed(seed), max_facets(max_facets),
          limits(limits), cb(cb) {
        usage.assign(static_cast<size_t>(n) * n, 0);
        chosen.assign(h.edge_count(), 0);
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(limits.time_cap_secs));
    }

    size_t pid(int a, int b) const { return static_cast<size_t>(a) * n + b; }

    void add_facet(int id) {
        const Triple& t = h.edge(id);
        chosen[id] = 1;
        chosen_list.push_back(id);
        for (const Pair p : {Pair{t[0], t[1]}, Pair{t[0], t[2]}, Pair{t[1], t[2]}}) {
            uint8_t& u = usage[pid(p[0], p[1])];
            if (++u == 1)
                open_pairs.push_back(p);
            else
                open_pairs.erase(std::find(open_pairs.begin(), open_pairs.end(), p));
        }
    }

    void remove_facet(int id) {
        const Triple& t = h.edge(id);
        chosen[id] = 0;
        chosen_list.pop_back();
        for (const Pair p : {Pair{t[0], t[1]}, Pair{t[0], t[2]}, Pair{t[1], t[2]}}) {
            uint8_t& u = usage[pid(p[0], p[1])];
            if (--u == 1)
                open_pairs.push_back(p);
            else
                open_pairs.erase(std::find(open_pairs.begin(), open_pairs.end(), p));
        }
    }

    void run() {
        add_facet(seed);
        dfs();
        remove_facet(seed);
    }

    void dfs() {
        if (stop) return;
        if (++stats.nodes > limits.max_nodes) {
            stats.complete = false;
            stop = true;
            return;
        }
        if ((stats.nodes & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline) {
            stats.complete = false;
            stop = true;
            return;
        }
        if (open_pairs.empty()) {
            std::vector<int> out = chosen_list;
            std::sort(out.begin(), out.end());
            if (cb(out)) {
                stats.stopped_by_callback = true;
                stop = true;
            }
            return;  // a closed complex admits no further facet through it
        }
        int left = max_facets - static_cast<int>(chosen_list.size());
        // each new facet closes at most 3 open pairs
        if (left <= 0 || static_cast<int>(open_pairs.size()) > 3 * left) return;

        Pair p = *std::min_element(open_pairs.begin(), open_pairs.end());
        for (int c : h.completions(p[0], p[1])) {
            Triple t = make_triple(p[0], p[1], c);
            int id = h.edge_index(t);
            if (chosen[id]) continue;
            if (lexmin && id < seed) continue;
            // the other two pairs of the facet must stay within usage 2
            bool ok = true;
            for (const Pair q : {Pair{std::min(p[0], c), std::max(p[0], c)},
                                 Pair{std::min(p[1], c), std::max(p[1], c)}})
                if (usage[pid(q[0], q[1])] >= 2) ok = false;
            if (!ok) continue;
            add_facet(id);
            dfs();
            remove_facet(id);
            if (stop) return;
        }
    }
};

}  // namespace

EnumStats enumerate_closed_complexes(const ThreeGraph& host, int seed_facet,
                                     bool forbid_below_seed, int max_facets,
                                     const EnumLimits& limits,
                                     const ClosedComplexCallback& on_closed) {
    Enumerator e(host, seed_facet, forbid_below_seed, max_facets, limits, on_closed);
    e.run();
    return e.stats;
}

EnumStats enumerate_all_closed_complexes(const ThreeGraph& host, int max_facets,
                                         const EnumLimits& limits,
                                         const ClosedComplexCallback& on_closed) {
    EnumStats total;
    uint64_t used = 0;
    auto start = std::chrono::steady_clock::now();
    for (int seed = 0; seed < host.edge_count(); ++seed) {
        EnumLimits rem = limits;
        rem.max_nodes = limits.max_nodes > used ? limits.max_nodes - used : 0;
        rem.time_cap_secs =
            limits.time_cap_secs -
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (rem.max_nodes == 0 || rem.time_cap_secs <= 0) {
            total.complete = false;
            return total;
        }
        EnumStats s = enumerate_closed_complexes(host, seed, true, max_facets, rem, on_closed);
        used += s.nodes;
        total.nodes += s.nodes;
        if (s.stopped_by_callback) {
            total.stopped_by_callback = true;
            return total;
        }
        if (!s.complete) {
            total.complete = false;
            return total;
        }
    }
    return total;
}

}  // namespace spansurf
