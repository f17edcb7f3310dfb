#include "spansurf/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "spansurf/enumerate.hpp"
#include "spansurf/intersect.hpp"

namespace spansurf {

namespace {

Complex complex_from_indices(const ThreeGraph& h, const std::vector<int>& ids) {
    std::vector<Triple> fs;
    fs.reserve(ids.size());
    for (int i : ids) fs.push_back(h.edge(i));
    return Complex(std::move(fs));
}

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

SearchBudget remaining(const SearchBudget& b, uint64_t used_nodes, const Clock& clk) {
    SearchBudget r = b;
    r.max_nodes = b.max_nodes > used_nodes ? b.max_nodes - used_nodes : 0;
    r.time_cap_secs = b.time_cap_secs - clk.secs();
    return r;
}

// Components able to host a spanning witness: those spanning all of V.
std::vector<ThreeGraph> spanning_component_hosts(const ThreeGraph& h) {
    auto part = tight_components(h);
    std::vector<ThreeGraph> hosts;
    for (const auto& comp : part.components) {
        if (static_cast<int>(comp.vertices.size()) != h.vertex_count()) continue;
        std::vector<Triple> es;
        es.reserve(comp.edge_indices.size());
        for (int i : comp.edge_indices) es.push_back(h.edge(i));
        hosts.emplace_back(h.vertex_count(), std::move(es));
    }
    return hosts;
}

// Facet-count exclusion: vertices that never share an edge of the
// component can each contribute at most one slot per facet, and a
// spanning surface gives every vertex at least 3 facets. So a pairwise
// non-cohabiting set S certifies emptiness when 2n - 2chi < 3|S|.
// A greedy independent set in the cohabitation graph suffices.
bool excluded_by_facet_count(const ThreeGraph& host, int chi) {
    const int n = host.vertex_count();
    std::vector<Bits> cohabit(n, Bits(n));
    for (const auto& t : host.edges()) {
        cohabit[t[0]].set(t[1]);
        cohabit[t[1]].set(t[0]);
        cohabit[t[0]].set(t[2]);
        cohabit[t[2]].set(t[0]);
        cohabit[t[1]].set(t[2]);
        cohabit[t[2]].set(t[1]);
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return cohabit[a].count() < cohabit[b].count(); });
    Bits taken(n);
    int s = 0;
    for (int v : order) {
        if (Bits::and_count(cohabit[v], taken) == 0) {
            taken.set(v);
            ++s;
        }
    }
    return 2 * n - 2 * chi < 3 * s;
}

}  // namespace

SearchOutcome find_spanning_sphere(const ThreeGraph& h, SearchBudget budget, int workers) {
    if (h.vertex_count() < 4)
        throw std::invalid_argument("find_spanning_sphere: n >= 4 required");
    Clock clk;
    SearchOutcome out;
    out.exhaustive = true;
    for (const auto& host : spanning_component_hosts(h)) {
        if (excluded_by_facet_count(host, 2)) continue;
        DiskOptions opt;
        opt.budget = remaining(budget, out.nodes, clk);
        opt.workers = workers;
        DiskResult r = disk_sphere_search(host, opt);
        out.nodes += r.nodes;
        if (r.verdict == Verdict::Found) {
            out.verdict = Verdict::Found;
            out.witness = complex_from_indices(host, r.witness);
            out.secs = clk.secs();
            return out;
        }
        if (r.verdict == Verdict::Indeterminate) out.exhaustive = false;
    }
    out.verdict = out.exhaustive ? Verdict::NoneCertified : Verdict::Indeterminate;
    out.secs = clk.secs();
    return out;
}

SearchOutcome find_spanning_surface(const ThreeGraph& h, std::optional<SurfaceType> target,
                                    SearchBudget budget, int workers) {
    const int n = h.vertex_count();
    if (target) {
        SurfaceType::make(target->euler, target->orientable);  // validates
        if (*target == SurfaceType::sphere()) {
            if (n < 4) throw std::invalid_argument("sphere target: n >= 4 required");
            return find_spanning_sphere(h, budget, workers);
        }
        if (*target == SurfaceType::torus() && n < 7)
            throw std::invalid_argument("torus target: n >= 7 required");
        if (*target == SurfaceType::projective_plane() && n < 6)
            throw std::invalid_argument("projective-plane target: n >= 6 required");
    }
    Clock clk;
    SearchOutcome out;
    out.exhaustive = true;
    // facet budget 2n - 2chi for a fixed target; otherwise the 3F = 2E
    // bound over all pairs caps F
    int max_f = target ? 2 * n - 2 * target->euler : n * (n - 1) / 3;

    for (const auto& host : spanning_component_hosts(h)) {
        if (target && excluded_by_facet_count(host, target->euler)) continue;
        EnumLimits lim{remaining(budget, out.nodes, clk).max_nodes,
                       remaining(budget, out.nodes, clk).time_cap_secs};
        std::optional<Complex> found;
        EnumStats st = enumerate_all_closed_complexes(
            host, max_f, lim, [&](const std::vector<int>& ids) {
                if (target && static_cast<int>(ids.size()) != max_f) return false;
                Complex k = complex_from_indices(host, ids);
                if (static_cast<int>(k.vertices().size()) != n) return false;
                auto chk = is_closed_surface(k);
                if (!chk.closed) return false;
                if (target && classify(k) != *target) return false;
                found = std::move(k);
                return true;
            });
        out.nodes += st.nodes;
        if (found) {
            out.verdict = Verdict::Found;
            out.witness = std::move(found);
            out.secs = clk.secs();
            return out;
        }
        if (!st.complete) out.exhaustive = false;
    }
    out.verdict = out.exhaustive ? Verdict::NoneCertified : Verdict::Indeterminate;
    out.secs = clk.secs();
    return out;
}

SearchOutcome find_double_pyramid(const ThreeGraph& h, const std::vector<int>& apex_pool,
                                  int cycle_len, SearchBudget budget) {
    if (cycle_len < 3) throw std::invalid_argument("find_double_pyramid: cycle length >= 3");
    Clock clk;
    SearchOutcome out;
    out.exhaustive = true;

    // rank apex pairs by common-link edge count (the averaging step)
    struct Cand {
        int count, v, w;
    };
    std::vector<Cand> cands;
    std::vector<int> pool = apex_pool;
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i + 1; j < pool.size(); ++j) {
            int v = pool[i], w = pool[j];
            int cnt = 0;
            for (int id : h.edges_at(v)) {
                const Triple& t = h.edge(id);
                int p = t[0] == v ? t[1] : t[0];
                int q = t[2] == v ? t[1] : t[2];
                if (p == w || q == w) continue;
                if (h.has_edge(make_triple(w, p, q))) ++cnt;
            }
            if (cnt >= cycle_len) cands.push_back({cnt, v, w});
        }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.count > b.count; });

    for (const auto& c : cands) {
        // common link graph on V minus the apexes
        std::vector<Pair> es;
        for (int id : h.edges_at(c.v)) {
            const Triple& t = h.edge(id);
            int p = t[0] == c.v ? t[1] : t[0];
            int q = t[2] == c.v ? t[1] : t[2];
            if (p == c.w || q == c.w) continue;
            if (h.has_edge(make_triple(c.w, p, q)))
                es.push_back({std::min(p, q), std::max(p, q)});
        }
        Graph common(h.vertex_count(), std::move(es));
        auto rem = remaining(budget, out.nodes, clk);
        if (rem.max_nodes == 0 || rem.time_cap_secs <= 0) {
            out.exhaustive = false;
            break;
        }
        CycleSearch cs = find_cycle(common, cycle_len, rem.max_nodes);
        out.nodes += cs.nodes;
        if (cs.verdict == Verdict::Found) {
            std::vector<Triple> fs;
            for (int i = 0; i < cycle_len; ++i) {
                int a = cs.cycle[i], b = cs.cycle[(i + 1) % cycle_len];
                fs.push_back(make_triple(a, b, c.v));
                fs.push_back(make_triple(a, b, c.w));
            }
            out.verdict = Verdict::Found;
            out.witness = Complex(std::move(fs));
            out.secs = clk.secs();
            return out;
        }
        if (cs.verdict == Verdict::Indeterminate) out.exhaustive = false;
    }
    out.verdict = out.exhaustive ? Verdict::NoneCertified : Verdict::Indeterminate;
    out.secs = clk.secs();
    return out;
}

CensusResult connectibility_census(const ThreeGraph& h, const Triple& e, const Triple& f,
                                   int l_max, SearchBudget budget) {
    if (!h.has_edge(e) || !h.has_edge(f))
        throw std::invalid_argument("connectibility_census: e and f must be host edges");
    {
        std::set<int> s(e.begin(), e.end());
        for (int v : f)
            if (s.count(v))
                throw std::invalid_argument("connectibility_census: e and f must be disjoint");
    }
    if (l_max < 1 || l_max > 6)
        throw std::invalid_argument("connectibility_census: l_max must be in 1..6");

    Clock clk;
    CensusResult res;
    const int n = h.vertex_count();
    std::vector<int> core(e.begin(), e.end());
    core.insert(core.end(), f.begin(), f.end());
    std::sort(core.begin(), core.end());
    std::vector<int> others;
    for (int v = 0; v < n; ++v)
        if (!std::binary_search(core.begin(), core.end(), v)) others.push_back(v);

    for (int l = 1; l <= l_max; ++l) {
        uint64_t count = 0;
        std::vector<std::vector<int>> witnesses;
        if (l <= static_cast<int>(others.size())) {
            std::vector<int> pick(l);
            for (int i = 0; i < l; ++i) pick[i] = i;
            for (;;) {
                std::vector<int> w = core;
                for (int i : pick) w.push_back(others[i]);
                std::sort(w.begin(), w.end());
                ThreeGraph sub = induced_subgraph(h, w);
                auto local = [&](const Triple& t) {
                    Triple r;
                    for (int i = 0; i < 3; ++i)
                        r[i] = static_cast<int>(
                            std::lower_bound(w.begin(), w.end(), t[i]) - w.begin());
                    return make_triple(r[0], r[1], r[2]);
                };
                DiskOptions opt;
                opt.first_facet = sub.edge_index(local(e));
                opt.required_facet = sub.edge_index(local(f));
                opt.budget = remaining(budget, res.nodes, clk);
                if (opt.budget.max_nodes == 0 || opt.budget.time_cap_secs <= 0)
                    res.exhaustive = false;
                if (*opt.first_facet >= 0 && *opt.required_facet >= 0 && res.exhaustive) {
                    DiskResult r = disk_sphere_search(sub, opt);
                    res.nodes += r.nodes;
                    if (r.verdict == Verdict::Found) {
                        ++count;
                        std::vector<int> a;
                        for (int i : pick) a.push_back(others[i]);
                        witnesses.push_back(a);
                    } else if (r.verdict == Verdict::Indeterminate) {
                        res.exhaustive = false;
                    }
                }
                int i = l - 1;
                while (i >= 0 && pick[i] == static_cast<int>(others.size()) - l + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < l; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        res.counts.push_back(count);
        // greedy pairwise-disjoint family in lexicographic witness order
        std::vector<std::vector<int>> family;
        std::set<int> used;
        for (const auto& a : witnesses) {
            bool clash = false;
            for (int v : a)
                if (used.count(v)) clash = true;
            if (!clash) {
                family.push_back(a);
                for (int v : a) used.insert(v);
            }
        }
        uint64_t nl = 1;
        for (int i = 0; i + 1 < l; ++i) nl *= static_cast<uint64_t>(n);
        res.family_bound_ok.push_back(count <= family.size() * static_cast<uint64_t>(l) * nl);
        res.families.push_back(std::move(family));
    }
    return res;
}

uint64_t touching_sphere_count(const ThreeGraph& h, const Triple& e, const Triple& f) {
    if (!h.has_edge(e) || !h.has_edge(f))
        throw std::invalid_argument("touching_sphere_count: e and f must be host edges");
    std::vector<int> shared, sym;
    for (int v : e)
        if (std::find(f.begin(), f.end(), v) != f.end())
            shared.push_back(v);
        else
            sym.push_back(v);
    for (int v : f)
        if (std::find(e.begin(), e.end(), v) == e.end()) sym.push_back(v);
    if (shared.size() != 2)
        throw std::invalid_argument("touching_sphere_count: edges must share exactly 2 vertices");
    int u = shared[0], v = shared[1], x = sym[0], y = sym[1];

    auto aux = [&](int p, int q) {
        if (p == q) return false;
        return h.has_edge(make_triple(p, q, x)) && h.has_edge(make_triple(p, q, y));
    };
    uint64_t count = 0;
    const int n = h.vertex_count();
    for (int w = 0; w < n; ++w) {
        if (w == u || w == v || w == x || w == y) continue;
        for (int z = w + 1; z < n; ++z) {
            if (z == u || z == v || z == x || z == y) continue;
            if (!aux(w, z)) continue;
            if ((aux(v, w) && aux(u, z)) || (aux(v, z) && aux(u, w))) ++count;
        }
    }
    return count;
}

SearchOutcome find_bipartite_sphere(const ThreeGraph& h, const std::vector<int>& a_side,
                                    const std::vector<int>& b_side, int k, SearchBudget budget,
                                    std::optional<uint64_t> seed) {
    if (k < 1) throw std::invalid_argument("find_bipartite_sphere: k >= 1 required");
    if (static_cast<int>(b_side.size()) < 4 * k)
        throw std::invalid_argument("find_bipartite_sphere: |B| < 4k");
    Clock clk;
    SearchOutcome out;

    std::vector<int> a_sorted = a_side;
    std::sort(a_sorted.begin(), a_sorted.end());
    auto a_local = [&](int v) {
        return static_cast<int>(std::lower_bound(a_sorted.begin(), a_sorted.end(), v) -
                                a_sorted.begin());
    };
    const int na = static_cast<int>(a_sorted.size());

    // candidate A-triples present in some link triangle, as universe ids
    std::map<Triple, int> triple_id;
    std::vector<Triple> triples;
    std::vector<std::vector<int>> hv(b_side.size());
    for (size_t bi = 0; bi < b_side.size(); ++bi) {
        int bv = b_side[bi];
        // triangles of the link graph of bv restricted to A
        for (int i1 = 0; i1 < na; ++i1)
            for (int i2 = i1 + 1; i2 < na; ++i2) {
                if (!h.has_edge(make_triple(bv, a_sorted[i1], a_sorted[i2]))) continue;
                for (int i3 = i2 + 1; i3 < na; ++i3) {
                    if (!h.has_edge(make_triple(bv, a_sorted[i1], a_sorted[i3]))) continue;
                    if (!h.has_edge(make_triple(bv, a_sorted[i2], a_sorted[i3]))) continue;
                    Triple t{i1, i2, i3};
                    auto [it, fresh] = triple_id.try_emplace(t, static_cast<int>(triples.size()));
                    if (fresh) triples.push_back(t);
                    hv[bi].push_back(it->second);
                }
            }
    }
    bool any = false;
    for (const auto& s : hv)
        if (!s.empty()) any = true;
    if (!any) {
        out.verdict = Verdict::NoneCertified;
        out.secs = clk.secs();
        return out;
    }

    auto try_k_set = [&](const std::vector<int>& kset) -> std::optional<Complex> {
        // intersection 3-graph over A-local labels
        std::vector<int> common;
        {
            std::vector<int> cnt(triples.size(), 0);
            for (int bi : kset)
                for (int tid : hv[bi]) ++cnt[tid];
            for (size_t t = 0; t < triples.size(); ++t)
                if (cnt[t] == static_cast<int>(kset.size())) common.push_back(static_cast<int>(t));
        }
        if (common.empty()) return std::nullopt;
        std::vector<Triple> es;
        for (int t : common) es.push_back(triples[t]);
        ThreeGraph hk(na, std::move(es));
        std::vector<int> pool(na);
        for (int i = 0; i < na; ++i) pool[i] = i;
        auto rem = remaining(budget, out.nodes, clk);
        SearchOutcome dp = find_double_pyramid(hk, pool, 2 * k, rem);
        out.nodes += dp.nodes;
        if (!dp.exhaustive) out.exhaustive = false;
        if (dp.verdict != Verdict::Found) return std::nullopt;
        // cone one K vertex into each face of the double pyramid
        std::vector<Triple> fs;
        const auto& faces = dp.witness->facets();
        for (size_t i = 0; i < faces.size(); ++i) {
            int bv = b_side[kset[i]];
            const Triple& t = faces[i];
            fs.push_back(make_triple(a_sorted[t[0]], a_sorted[t[1]], bv));
            fs.push_back(make_triple(a_sorted[t[0]], a_sorted[t[2]], bv));
            fs.push_back(make_triple(a_sorted[t[1]], a_sorted[t[2]], bv));
        }
        return Complex(std::move(fs));
    };

    out.exhaustive = true;
    // the averaging pick first; fall back to exhausting all K when feasible
    std::vector<std::vector<int>> hv_sets;
    for (auto& s : hv) hv_sets.push_back(s);
    IntersectionResult best =
        best_intersection(hv_sets, static_cast<int>(triples.size()), 4 * k, seed);
    if (auto w = try_k_set(best.chosen)) {
        out.verdict = Verdict::Found;
        out.witness = std::move(*w);
        out.secs = clk.secs();
        return out;
    }
    uint64_t combos = 1;
    bool small = true;
    for (int i = 1; i <= 4 * k; ++i) {
        combos = combos * (b_side.size() - 4 * k + i) / i;
        if (combos > 1'000'000) {
            small = false;
            break;
        }
    }
    if (small) {
        std::vector<int> pick(4 * k);
        for (int i = 0; i < 4 * k; ++i) pick[i] = i;
        for (;;) {
            if (auto w = try_k_set(pick)) {
                out.verdict = Verdict::Found;
                out.witness = std::move(*w);
                out.secs = clk.secs();
                return out;
            }
            int i = 4 * k - 1;
            while (i >= 0 && pick[i] == static_cast<int>(b_side.size()) - 4 * k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < 4 * k; ++j) pick[j] = pick[j - 1] + 1;
        }
        out.verdict = out.exhaustive ? Verdict::NoneCertified : Verdict::Indeterminate;
    } else {
        out.verdict = Verdict::Indeterminate;
    }
    out.secs = clk.secs();
    return out;
}

CoverResult max_surface_cover(const ThreeGraph& h, SearchBudget budget) {
    Clock clk;
    CoverResult res;
    auto part = tight_components(h);
    // larger spans first so the span <= best pruning bites early
    std::vector<int> order(part.components.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return part.components[a].vertices.size() > part.components[b].vertices.size();
    });
    const int n = h.vertex_count();
    for (int ci : order) {
        const auto& comp = part.components[ci];
        if (static_cast<int>(comp.vertices.size()) <= res.max_cover) continue;
        std::vector<Triple> es;
        for (int i : comp.edge_indices) es.push_back(h.edge(i));
        ThreeGraph host(n, std::move(es));
        auto rem = remaining(budget, res.nodes, clk);
        EnumLimits lim{rem.max_nodes, rem.time_cap_secs};
        EnumStats st = enumerate_all_closed_complexes(
            host, n * (n - 1) / 3, lim, [&](const std::vector<int>& ids) {
                Complex k = complex_from_indices(host, ids);
                if (static_cast<int>(k.vertices().size()) <= res.max_cover) return false;
                if (!is_closed_surface(k).closed) return false;
                res.max_cover = static_cast<int>(k.vertices().size());
                res.witness = std::move(k);
                return false;  // keep looking for a larger one
            });
        res.nodes += st.nodes;
        if (!st.complete) res.exhaustive = false;
    }
    return res;
}

}  // namespace spansurf
