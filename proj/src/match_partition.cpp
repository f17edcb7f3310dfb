#include "spansurf/match_partition.hpp"

#include <algorithm>
#include <string>

#include "spansurf/matching.hpp"

namespace spansurf {

MatchPartition match_partition(const Graph& g, double eps) {
    if (!(eps > 0.0 && eps <= 1.0))
        throw std::invalid_argument("match_partition: eps must be in (0, 1]");
    const int n = g.vertex_count();
    const double threshold = eps * n / 2.0;

    std::vector<int> mate = maximum_matching(g);
    MatchPartition out;

    // 0 = Z (matched, default), 1 = B, 2 = C, 3 = D
    std::vector<int> side(n, 0);
    std::vector<char> target(n, 0);  // B u (earlier D)
    for (int v = 0; v < n; ++v)
        if (mate[v] == -1) {
            side[v] = 1;
            target[v] = 1;
        }

    for (;;) {
        std::vector<int> qualifying;
        for (int v = 0; v < n; ++v) {
            if (side[v] != 0) continue;
            int cnt = 0;
            for (int u : g.neighbours(v))
                if (target[u]) ++cnt;
            if (cnt >= threshold) qualifying.push_back(v);
        }
        if (static_cast<double>(qualifying.size()) < threshold || qualifying.empty()) break;
        ++out.rounds;
        for (int v : qualifying) side[v] = 2;
        for (int v : qualifying) {
            int u = mate[v];
            if (side[u] == 2)
                throw MatchPartitionError(
                    "match_partition: both endpoints of matching edge {" + std::to_string(v) +
                    "," + std::to_string(u) +
                    "} qualified for C in round " + std::to_string(out.rounds) +
                    " (eps*n/2 = " + std::to_string(threshold) + ")");
            side[u] = 3;
            target[u] = 1;
        }
    }

    for (int v = 0; v < n; ++v) switch (side[v]) {
            case 0: out.z.push_back(v); break;
            case 1: out.b.push_back(v); break;
            case 2: out.c.push_back(v); break;
            case 3: out.d.push_back(v); break;
        }

    // clause 1: M restricted to Z is a perfect matching on Z
    for (int v : out.z) {
        if (mate[v] == -1 || side[mate[v]] != 0)
            throw MatchPartitionError("match_partition: Z is not perfectly matched at vertex " +
                                      std::to_string(v));
        if (v < mate[v]) out.matching_z.push_back({v, mate[v]});
    }
    // clause 2: M restricted to C is a perfect matching into D
    if (out.c.size() != out.d.size())
        throw MatchPartitionError("match_partition: |C| != |D|");
    for (int v : out.c) {
        if (mate[v] == -1 || side[mate[v]] != 3)
            throw MatchPartitionError(
                "match_partition: C vertex " + std::to_string(v) + " not matched into D");
        out.matching_cd.push_back({v, mate[v]});
    }
    // clause 3: few edges leave B u D towards Z u B u D
    for (const auto& e : g.edges()) {
        bool a_bd = side[e[0]] == 1 || side[e[0]] == 3;
        bool b_bd = side[e[1]] == 1 || side[e[1]] == 3;
        bool a_zbd = side[e[0]] != 2;
        bool b_zbd = side[e[1]] != 2;
        if ((a_bd && b_zbd) || (b_bd && a_zbd)) ++out.boundary_edge_count;
    }
    if (static_cast<double>(out.boundary_edge_count) > eps * static_cast<double>(n) * n)
        throw MatchPartitionError("match_partition: boundary count " +
                                  std::to_string(out.boundary_edge_count) + " exceeds eps*n^2");
    return out;
}

}  // namespace spansurf
