#include "spansurf/colouring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "spansurf/tight.hpp"

namespace spansurf {

ColouringReport check_colouring(const ThreeGraph& h, const EdgeColouring& c, double eps,
                                double mu) {
    if (static_cast<int>(c.colour_of.size()) != h.edge_count())
        throw std::invalid_argument("check_colouring: colouring domain must equal E(H)");
    const double n = h.vertex_count();
    ColouringReport r;
    r.delta2 = h.vertex_count() >= 2 ? h.min_codegree() : 0;
    r.codegree_needed = (1.0 / 3.0 + mu) * n;
    r.codegree_ok = r.delta2 >= r.codegree_needed;

    for (auto col : c.colour_of)
        if (col == EdgeColour::Uncoloured) ++r.uncoloured;
    r.uncoloured_cap = eps * n * n * n;
    r.uncoloured_ok = static_cast<double>(r.uncoloured) <= r.uncoloured_cap;

    for (const auto& [i, j] : touching_pairs(h)) {
        EdgeColour a = c.colour_of[i], b = c.colour_of[j];
        bool cross = (a == EdgeColour::Red && b == EdgeColour::Green) ||
                     (a == EdgeColour::Green && b == EdgeColour::Red);
        if (cross) ++r.cross_touching;
    }
    r.cross_cap = eps * n * n * n * n;
    r.cross_ok = static_cast<double>(r.cross_touching) <= r.cross_cap;

    std::vector<int> red_at(h.vertex_count(), 0);
    for (int i = 0; i < h.edge_count(); ++i)
        if (c.colour_of[i] == EdgeColour::Red)
            for (int v : h.edge(i)) ++red_at[v];
    r.low_red_threshold = eps * n * n;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (red_at[v] < r.low_red_threshold) ++r.low_red_vertices;
    r.low_red_needed = mu * n / 4.0;
    r.low_red_ok = r.low_red_vertices >= r.low_red_needed;

    r.all_ok = r.codegree_ok && r.uncoloured_ok && r.cross_ok && r.low_red_ok;
    return r;
}

Graph green_link(const ThreeGraph& h, const EdgeColouring& c, int v) {
    if (v < 0 || v >= h.vertex_count())
        throw std::invalid_argument("green_link: vertex out of range");
    std::vector<Pair> es;
    for (int id : h.edges_at(v)) {
        if (c.colour_of[id] != EdgeColour::Green) continue;
        const Triple& t = h.edge(id);
        Pair p;
        int k = 0;
        for (int w : t)
            if (w != v) p[k++] = w;
        es.push_back(p);
    }
    return Graph(h.vertex_count(), std::move(es));
}

MergeResult merge_colouring(const ThreeGraph& h, uint64_t merge_threshold) {
    return merge_colouring(h, merge_threshold, tight_components(h).component_of);
}

MergeResult merge_colouring(const ThreeGraph& h, uint64_t merge_threshold,
                            const std::vector<int>& initial_colour_of) {
    if (merge_threshold < 1) throw std::invalid_argument("merge_colouring: threshold >= 1");
    if (static_cast<int>(initial_colour_of.size()) != h.edge_count())
        throw std::invalid_argument("merge_colouring: initial colouring domain must be E(H)");
    MergeResult res;
    res.raw_colour_of = initial_colour_of;

    auto touching = touching_pairs(h);
    for (;;) {
        std::map<std::pair<int, int>, uint64_t> cross;
        for (const auto& [i, j] : touching) {
            int a = res.raw_colour_of[i], b = res.raw_colour_of[j];
            if (a == b) continue;
            cross[{std::min(a, b), std::max(a, b)}]++;
        }
        std::pair<int, int> best{-1, -1};
        uint64_t best_count = 0;
        for (const auto& [pr, cnt] : cross) {
            if (cnt < merge_threshold) continue;
            if (cnt > best_count || (cnt == best_count && (best.first < 0 || pr < best))) {
                best = pr;
                best_count = cnt;
            }
        }
        if (best.first < 0) break;
        res.log.push_back({best.first, best.second, best_count});
        for (int& col : res.raw_colour_of)
            if (col == best.second) col = best.first;
    }

    // surviving colours by edge count, two largest become Green then Red
    std::map<int, uint64_t> size_of;
    for (int col : res.raw_colour_of) ++size_of[col];
    res.final_colour_count = static_cast<int>(size_of.size());
    std::vector<std::pair<int, uint64_t>> order(size_of.begin(), size_of.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    int green = order.empty() ? -1 : order[0].first;
    int red = order.size() > 1 ? order[1].first : -2;
    res.colouring.colour_of.assign(h.edge_count(), EdgeColour::Uncoloured);
    for (int i = 0; i < h.edge_count(); ++i) {
        if (res.raw_colour_of[i] == green)
            res.colouring.colour_of[i] = EdgeColour::Green;
        else if (res.raw_colour_of[i] == red)
            res.colouring.colour_of[i] = EdgeColour::Red;
    }
    return res;
}

}  // namespace spansurf
