#include "spansurf/surface.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace spansurf {

Complex::Complex(std::vector<Triple> facets) {
    for (auto& t : facets) {
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2])
            throw std::invalid_argument("Complex: facet with repeated vertex");
        if (t[0] < 0) throw std::invalid_argument("Complex: negative vertex");
    }
    std::sort(facets.begin(), facets.end());
    if (std::adjacent_find(facets.begin(), facets.end()) != facets.end())
        throw std::invalid_argument("Complex: duplicate facet");
    facets_ = std::move(facets);

    std::set<int> vs;
    std::set<Pair> ps;
    for (const auto& t : facets_) {
        for (int v : t) vs.insert(v);
        ps.insert({t[0], t[1]});
        ps.insert({t[0], t[2]});
        ps.insert({t[1], t[2]});
    }
    vertices_.assign(vs.begin(), vs.end());
    pairs_.assign(ps.begin(), ps.end());
}

bool Complex::has_facet(const Triple& t) const {
    return std::binary_search(facets_.begin(), facets_.end(), t);
}

std::string SurfaceType::name() const {
    if (euler == 2) return "sphere";
    if (orientable) return "torus-sum(" + std::to_string((2 - euler) / 2) + ")";
    return "projective-sum(" + std::to_string(2 - euler) + ")";
}

std::string SurfaceType::display_name() const {
    if (euler == 2) return "sphere";
    if (orientable && euler == 0) return "torus";
    if (!orientable && euler == 1) return "projective-plane";
    return name();
}

SurfaceType SurfaceType::make(int euler, bool orientable) {
    if (orientable) {
        if (euler > 2 || euler % 2 != 0)
            throw std::invalid_argument("SurfaceType: orientable surfaces have even chi <= 2");
    } else {
        if (euler > 1)
            throw std::invalid_argument("SurfaceType: non-orientable surfaces have chi <= 1");
    }
    return SurfaceType{euler, orientable};
}

std::string SurfaceCheck::describe() const {
    switch (failure) {
        case Failure::None:
            return "closed surface";
        case Failure::PairDegree:
            return "pair {" + std::to_string(witness_pair[0]) + "," +
                   std::to_string(witness_pair[1]) + "} not in exactly 2 facets";
        case Failure::VertexLink:
            return "link of vertex " + std::to_string(witness_vertex) + " is not a single cycle";
        case Failure::Disconnected:
            return "facet adjacency is disconnected";
    }
    return "";
}

SurfaceCheck is_closed_surface(const Complex& k) {
    if (k.facet_count() == 0) throw std::invalid_argument("is_closed_surface: empty complex");
    SurfaceCheck res;

    // (a) every pair in exactly 2 facets
    std::map<Pair, std::vector<int>> at_pair;
    for (int i = 0; i < k.facet_count(); ++i) {
        const Triple& t = k.facets()[i];
        at_pair[{t[0], t[1]}].push_back(i);
        at_pair[{t[0], t[2]}].push_back(i);
        at_pair[{t[1], t[2]}].push_back(i);
    }
    for (const auto& [p, fs] : at_pair)
        if (fs.size() != 2) {
            res.failure = SurfaceCheck::Failure::PairDegree;
            res.witness_pair = p;
            return res;
        }

    // (b) each vertex link is a single cycle of length >= 3. Link degrees
    // are all 2 by (a); a single cycle is equivalent to the link being
    // connected with as many edges as vertices.
    std::map<int, std::map<int, std::vector<int>>> link;  // v -> link adjacency
    for (const auto& t : k.facets()) {
        link[t[0]][t[1]].push_back(t[2]);
        link[t[0]][t[2]].push_back(t[1]);
        link[t[1]][t[0]].push_back(t[2]);
        link[t[1]][t[2]].push_back(t[0]);
        link[t[2]][t[0]].push_back(t[1]);
        link[t[2]][t[1]].push_back(t[0]);
    }
    for (const auto& [v, adj] : link) {
        size_t nodes = adj.size();
        if (nodes < 3) {
            res.failure = SurfaceCheck::Failure::VertexLink;
            res.witness_vertex = v;
            return res;
        }
        // walk the cycle from the first link vertex
        int start = adj.begin()->first;
        int prev = -1, cur = start;
        size_t seen = 0;
        do {
            ++seen;
            const auto& nb = adj.at(cur);
            if (nb.size() != 2) {  // cannot happen after (a), defensive only
                seen = 0;
                break;
            }
            int next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        } while (cur != start && seen <= nodes);
        if (seen != nodes) {
            res.failure = SurfaceCheck::Failure::VertexLink;
            res.witness_vertex = v;
            return res;
        }
    }

    // (c) facet adjacency connected
    std::vector<char> visited(k.facet_count(), 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        const Triple& t = k.facets()[f];
        for (const Pair p : {Pair{t[0], t[1]}, Pair{t[0], t[2]}, Pair{t[1], t[2]}})
            for (int g : at_pair[p])
                if (!visited[g]) {
                    visited[g] = 1;
                    stack.push_back(g);
                }
    }
    for (int f = 0; f < k.facet_count(); ++f)
        if (!visited[f]) {
            res.failure = SurfaceCheck::Failure::Disconnected;
            res.witness_facet = f;
            return res;
        }

    res.closed = true;
    return res;
}

int euler_characteristic(const Complex& k) {
    return static_cast<int>(k.vertices().size()) - static_cast<int>(k.pairs().size()) +
           k.facet_count();
}

bool orientability(const Complex& k) {
    // Propagate a cyclic orientation over the facet adjacency; adjacent
    // facets must traverse their shared pair in opposite directions.
    std::map<Pair, std::vector<int>> at_pair;
    for (int i = 0; i < k.facet_count(); ++i) {
        const Triple& t = k.facets()[i];
        at_pair[{t[0], t[1]}].push_back(i);
        at_pair[{t[0], t[2]}].push_back(i);
        at_pair[{t[1], t[2]}].push_back(i);
    }
    // orientation of facet i: a cyclic order of its vertices; store as the
    // triple in traversal order. 0 = unassigned sign, 1/-1 relative to the
    // sorted order (a,b,c).
    std::vector<int> sign(k.facet_count(), 0);
    auto traverses = [&](int f, int x, int y, int s) {
        // does facet f with sign s traverse the directed edge x->y?
        const Triple& t = k.facets()[f];
        // sign +1 means cyclic order (t0,t1,t2); -1 means (t0,t2,t1)
        int ord[3] = {t[0], t[1], t[2]};
        if (s < 0) std::swap(ord[1], ord[2]);
        for (int i = 0; i < 3; ++i)
            if (ord[i] == x && ord[(i + 1) % 3] == y) return true;
        return false;
    };
    std::vector<int> stack;
    for (int root = 0; root < k.facet_count(); ++root) {
        if (sign[root] != 0) continue;
        sign[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            const Triple& t = k.facets()[f];
            for (const Pair p : {Pair{t[0], t[1]}, Pair{t[0], t[2]}, Pair{t[1], t[2]}}) {
                for (int g : at_pair[p]) {
                    if (g == f) continue;
                    // f traverses p in one direction; g must traverse it in
                    // the other.
                    bool f_fwd = traverses(f, p[0], p[1], sign[f]);
                    int need = traverses(g, p[0], p[1], 1) == f_fwd ? -1 : 1;
                    if (sign[g] == 0) {
                        sign[g] = need;
                        stack.push_back(g);
                    } else if (sign[g] != need) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

SurfaceType classify(const Complex& k) {
    auto chk = is_closed_surface(k);
    if (!chk.closed)
        throw std::invalid_argument("classify: not a closed surface (" + chk.describe() + ")");
    return SurfaceType::make(euler_characteristic(k), orientability(k));
}

bool spans(const Complex& k, const ThreeGraph& h) {
    for (const auto& t : k.facets())
        if (!h.has_edge(t))
            throw std::invalid_argument("spans: facet is not an edge of the host");
    const auto& vs = k.vertices();
    if (static_cast<int>(vs.size()) != h.vertex_count()) return false;
    for (int i = 0; i < h.vertex_count(); ++i)
        if (vs[i] != i) return false;
    return true;
}

Complex connected_sum_glue(const Complex& k1, const Complex& k2, const Complex& tube,
                           const Triple& f1, const Triple& f2) {
    if (!k1.has_facet(f1))
        throw std::invalid_argument("connected_sum_glue: removed facet f1 not in K1");
    if (!k2.has_facet(f2))
        throw std::invalid_argument("connected_sum_glue: removed facet f2 not in K2");
    if (!tube.has_facet(f1) || !tube.has_facet(f2))
        throw std::invalid_argument("connected_sum_glue: tube must contain both removed facets");
    if (f1 == f2) throw std::invalid_argument("connected_sum_glue: removed facets must differ");
    {
        auto tchk = is_closed_surface(tube);
        if (!tchk.closed || euler_characteristic(tube) != 2 || !orientability(tube))
            throw std::invalid_argument("connected_sum_glue: tube is not a sphere");
    }
    // facet-disjointness except for the two removed facets
    for (const auto& t : k1.facets()) {
        if (k2.has_facet(t))
            throw std::invalid_argument("connected_sum_glue: K1 and K2 share a facet");
        if (tube.has_facet(t) && t != f1)
            throw std::invalid_argument("connected_sum_glue: K1 and tube share a facet besides f1");
    }
    for (const auto& t : k2.facets())
        if (tube.has_facet(t) && t != f2)
            throw std::invalid_argument("connected_sum_glue: K2 and tube share a facet besides f2");

    // symmetric difference: f1 and f2 appear twice and cancel
    std::map<Triple, int> mult;
    for (const auto& t : k1.facets()) ++mult[t];
    for (const auto& t : k2.facets()) ++mult[t];
    for (const auto& t : tube.facets()) ++mult[t];
    std::vector<Triple> out;
    for (const auto& [t, c] : mult)
        if (c % 2 == 1) out.push_back(t);
    return Complex(std::move(out));
}

}  // namespace spansurf
