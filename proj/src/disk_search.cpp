#include "spansurf/disk_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>
#include <unordered_set>

namespace spansurf {

namespace {

struct Key128 {
    uint64_t a = 0, b = 0;
    bool operator==(const Key128&) const = default;
};

struct Key128Hash {
    size_t operator()(const Key128& k) const {
        uint64_t x = k.a * 0x9e3779b97f4a7c15ull ^ (k.b + 0xbf58476d1ce4e5b9ull);
        x ^= x >> 31;
        x *= 0x94d049bb133111ebull;
        x ^= x >> 29;
        return static_cast<size_t>(x);
    }
};

constexpr size_t kMemoCap = 1u << 21;

struct Shared {
    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> found{false};
    std::atomic<bool> truncated{false};
    std::atomic<int> next_candidate{0};
    std::mutex witness_mu;
    std::vector<int> witness;
    std::chrono::steady_clock::time_point deadline;
    uint64_t node_cap = 0;
};

struct Worker {
    const ThreeGraph& h;
    const DiskOptions& opt;
    Shared& sh;

    int n;
    int f0 = 0;
    bool lexmin = true;
    int req = -1;

    std::vector<uint8_t> usage;   // pair id -> chosen facets through it
    std::vector<int8_t> vstate;   // 0 unused, 1 boundary, 2 interior
    std::vector<char> chosen;
    std::vector<int> chosen_list;
    std::vector<int> boundary;
    int unused = 0;

    // exact facet-set memo when the host fits in 128 bits
    bool memo_on = false;
    Key128 mask;
    std::unordered_set<Key128, Key128Hash> memo;

    uint64_t local_nodes = 0;
    bool stop_local = false;  // found or truncated

    Worker(const ThreeGraph& h, const DiskOptions& opt, Shared& sh)
        : h(h), opt(opt), sh(sh), n(h.vertex_count()) {
        usage.assign(static_cast<size_t>(n) * n, 0);
        vstate.assign(n, 0);
        chosen.assign(h.edge_count(), 0);
        req = opt.required_facet.value_or(-1);
        memo_on = h.edge_count() <= 128;
    }

    size_t pid(int a, int b) const {
        return a < b ? static_cast<size_t>(a) * n + b : static_cast<size_t>(b) * n + a;
    }

    bool tick() {
        if (++local_nodes % 1024 == 0) {
            uint64_t total = sh.nodes.fetch_add(1024) + 1024;
            if (total > sh.node_cap || std::chrono::steady_clock::now() > sh.deadline) {
                sh.truncated.store(true);
                return false;
            }
            if (sh.found.load(std::memory_order_relaxed)) return false;
        }
        return true;
    }

    void mask_flip(int id) {
        if (id < 64)
            mask.a ^= uint64_t{1} << id;
        else
            mask.b ^= uint64_t{1} << (id - 64);
    }

    // a facet is still usable if unchosen, allowed by the lex-min partition,
    // none of its pairs is saturated and none of its vertices is interior
    bool facet_open(int id) const {
        if (chosen[id] || (lexmin && id < f0)) return false;
        const Triple& t = h.edge(id);
        if (vstate[t[0]] == 2 || vstate[t[1]] == 2 || vstate[t[2]] == 2) return false;
        return usage[pid(t[0], t[1])] < 2 && usage[pid(t[0], t[2])] < 2 &&
               usage[pid(t[1], t[2])] < 2;
    }

    bool prune() {
        // every still-unused vertex needs at least 3 usable facets
        if (opt.spanning) {
            for (int v = 0; v < n && unused > 0; ++v) {
                if (vstate[v] != 0) continue;
                int avail = 0;
                for (int id : h.edges_at(v))
                    if (facet_open(id) && ++avail == 3) break;
                if (avail < 3) return true;
            }
        }
        // every boundary edge needs a usable completion
        const int L = static_cast<int>(boundary.size());
        for (int i = 0; i < L; ++i) {
            int a = boundary[i], b = boundary[(i + 1) % L];
            bool ok = false;
            for (int c : h.completions(std::min(a, b), std::max(a, b))) {
                int id = h.edge_index(make_triple(a, b, c));
                if (facet_open(id)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return true;
        }
        // the required facet must stay addable
        if (req >= 0 && !chosen[req] && !facet_open(req)) return true;
        return false;
    }

    bool success() {
        if (req >= 0 && !chosen[req]) return false;
        if (sh.found.exchange(true)) return true;  // sibling won the race
        std::lock_guard<std::mutex> lk(sh.witness_mu);
        sh.witness = chosen_list;
        std::sort(sh.witness.begin(), sh.witness.end());
        return true;
    }

    void dfs() {
        if (stop_local) return;
        if (!tick() || sh.found.load(std::memory_order_relaxed)) {
            stop_local = true;
            return;
        }
        if (memo_on) {
            if (memo.contains(mask)) return;
            if (memo.size() < kMemoCap) memo.insert(mask);
        }
        const int L = static_cast<int>(boundary.size());

        // closing move
        if (L == 3 && (!opt.spanning || unused == 0)) {
            Triple t = make_triple(boundary[0], boundary[1], boundary[2]);
            int id = h.edge_index(t);
            if (id >= 0 && !chosen[id] && !(lexmin && id < f0)) {
                chosen[id] = 1;
                chosen_list.push_back(id);
                bool done = success();
                chosen_list.pop_back();
                chosen[id] = 0;
                if (done) {
                    stop_local = true;
                    return;
                }
            }
        }
        if (prune()) return;

        for (int i = 0; i < L; ++i) {
            int a = boundary[i], b = boundary[(i + 1) % L];
            int nxt = boundary[(i + 2) % L];
            for (int c : h.completions(std::min(a, b), std::max(a, b))) {
                int id = h.edge_index(make_triple(a, b, c));
                if (chosen[id] || (lexmin && id < f0)) continue;
                if (vstate[c] == 0) {
                    apply_new_vertex(i, id, a, b, c);
                    dfs();
                    undo_new_vertex(i, c, a, b, id);
                } else if (vstate[c] == 1 && L >= 4 && c == nxt) {
                    // ear absorbing b; the one absorbing a is generated at i-1
                    if (usage[pid(a, c)] != 0) continue;
                    apply_ear(i, id, a, b, c);
                    dfs();
                    undo_ear(i, id, a, b, c);
                }
                if (stop_local) return;
            }
        }
    }

    void apply_new_vertex(int i, int id, int a, int b, int c) {
        chosen[id] = 1;
        chosen_list.push_back(id);
        if (memo_on) mask_flip(id);
        ++usage[pid(a, b)];
        ++usage[pid(a, c)];
        ++usage[pid(b, c)];
        vstate[c] = 1;
        --unused;
        boundary.insert(boundary.begin() + i + 1, c);
    }

    void undo_new_vertex(int i, int c, int a, int b, int id) {
        boundary.erase(boundary.begin() + i + 1);
        ++unused;
        vstate[c] = 0;
        --usage[pid(a, b)];
        --usage[pid(a, c)];
        --usage[pid(b, c)];
        if (memo_on) mask_flip(id);
        chosen_list.pop_back();
        chosen[id] = 0;
    }

    void apply_ear(int i, int id, int a, int b, int c) {
        chosen[id] = 1;
        chosen_list.push_back(id);
        if (memo_on) mask_flip(id);
        ++usage[pid(a, b)];
        ++usage[pid(b, c)];
        ++usage[pid(a, c)];
        vstate[b] = 2;
        int L = static_cast<int>(boundary.size());
        boundary.erase(boundary.begin() + (i + 1) % L);
    }

    void undo_ear(int i, int id, int a, int b, int c) {
        int L = static_cast<int>(boundary.size());
        boundary.insert(boundary.begin() + (i + 1) % (L + 1), b);
        vstate[b] = 1;
        --usage[pid(a, b)];
        --usage[pid(b, c)];
        --usage[pid(a, c)];
        if (memo_on) mask_flip(id);
        chosen_list.pop_back();
        chosen[id] = 0;
    }

    void run_candidate(int cand) {
        f0 = cand;
        lexmin = !opt.first_facet.has_value();
        const Triple& t = h.edge(cand);
        chosen[cand] = 1;
        chosen_list = {cand};
        if (memo_on) {
            mask = {};
            mask_flip(cand);
            memo.clear();
        }
        usage[pid(t[0], t[1])] = 1;
        usage[pid(t[0], t[2])] = 1;
        usage[pid(t[1], t[2])] = 1;
        vstate[t[0]] = vstate[t[1]] = vstate[t[2]] = 1;
        unused = n - 3;
        boundary = {t[0], t[1], t[2]};
        stop_local = false;
        dfs();
        chosen[cand] = 0;
        chosen_list.clear();
        usage[pid(t[0], t[1])] = 0;
        usage[pid(t[0], t[2])] = 0;
        usage[pid(t[1], t[2])] = 0;
        vstate[t[0]] = vstate[t[1]] = vstate[t[2]] = 0;
    }

    void run() {
        if (opt.first_facet) {
            run_candidate(*opt.first_facet);
            return;
        }
        const int m = h.edge_count();
        for (;;) {
            int cand = sh.next_candidate.fetch_add(1);
            if (cand >= m) return;
            if (sh.found.load() || sh.truncated.load()) return;
            run_candidate(cand);
        }
    }
};

}  // namespace

DiskResult disk_sphere_search(const ThreeGraph& host, const DiskOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    Shared sh;
    sh.node_cap = opt.budget.max_nodes;
    sh.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(opt.budget.time_cap_secs));

    int workers = std::max(1, opt.workers);
    if (opt.first_facet || host.edge_count() < 2) workers = 1;
    if (workers == 1) {
        Worker w(host, opt, sh);
        w.run();
        sh.nodes.fetch_add(w.local_nodes % 1024);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i)
            pool.emplace_back([&host, &opt, &sh] {
                Worker w(host, opt, sh);
                w.run();
                sh.nodes.fetch_add(w.local_nodes % 1024);
            });
        for (auto& t : pool) t.join();
    }

    DiskResult res;
    res.nodes = sh.nodes.load();
    res.secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (sh.found.load()) {
        res.verdict = Verdict::Found;
        res.witness = sh.witness;
    } else if (sh.truncated.load()) {
        res.verdict = Verdict::Indeterminate;
    } else {
        res.verdict = Verdict::NoneCertified;
    }
    return res;
}

}  // namespace spansurf
