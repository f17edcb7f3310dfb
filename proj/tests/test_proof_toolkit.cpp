#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "spansurf/colouring.hpp"
#include "spansurf/constructions.hpp"
#include "spansurf/match_partition.hpp"
#include "spansurf/matching.hpp"
#include "spansurf/tight.hpp"

using namespace spansurf;

TEST_CASE("check_colouring clauses") {
    auto k6 = complete_three_graph(6);
    auto all_green = EdgeColouring::uniform(k6, EdgeColour::Green);
    auto rep = check_colouring(k6, all_green, 1.0, 0.05);
    CHECK(rep.all_ok);
    CHECK(rep.uncoloured == 0);
    CHECK(rep.cross_touching == 0);

    // colouring by tight component never produces cross-touching pairs
    auto h = two_component_extremal(10);
    auto part = tight_components(h);
    EdgeColouring by_comp;
    for (int i = 0; i < h.edge_count(); ++i)
        by_comp.colour_of.push_back(part.component_of[i] == 0 ? EdgeColour::Green
                                                              : EdgeColour::Red);
    auto rep2 = check_colouring(h, by_comp, 0.01, 0.1);
    CHECK(rep2.cross_touching == 0);

    CHECK_THROWS_AS(check_colouring(h, EdgeColouring{}, 0.1, 0.1), std::invalid_argument);
}

TEST_CASE("check_colouring counts match the double-loop oracle") {
    Rng rng(0xadda);
    for (int t = 0; t < 6; ++t) {
        auto h = oracles::random_three_graph(rng, 7 + rng.below(3), 0.5);
        if (h.edge_count() == 0) continue;
        EdgeColouring c;
        for (int i = 0; i < h.edge_count(); ++i) {
            int r = rng.below(3);
            c.colour_of.push_back(r == 0   ? EdgeColour::Red
                                  : r == 1 ? EdgeColour::Green
                                           : EdgeColour::Uncoloured);
        }
        auto rep = check_colouring(h, c, 0.02, 0.3);
        uint64_t cross = 0;
        for (int i = 0; i < h.edge_count(); ++i)
            for (int j = i + 1; j < h.edge_count(); ++j) {
                int shared = 0;
                for (int x : h.edge(i))
                    for (int y : h.edge(j))
                        if (x == y) ++shared;
                if (shared != 2) continue;
                auto a = c.colour_of[i], b = c.colour_of[j];
                if ((a == EdgeColour::Red && b == EdgeColour::Green) ||
                    (a == EdgeColour::Green && b == EdgeColour::Red))
                    ++cross;
            }
        CHECK(rep.cross_touching == cross);
        int low = 0;
        for (int v = 0; v < h.vertex_count(); ++v) {
            int reds = 0;
            for (int i = 0; i < h.edge_count(); ++i)
                if (c.colour_of[i] == EdgeColour::Red)
                    for (int w : h.edge(i))
                        if (w == v) ++reds;
            if (reds < rep.low_red_threshold) ++low;
        }
        CHECK(rep.low_red_vertices == low);
    }
}

TEST_CASE("green link graphs") {
    auto k5 = complete_three_graph(5);
    auto all_green = EdgeColouring::uniform(k5, EdgeColour::Green);
    auto all_red = EdgeColouring::uniform(k5, EdgeColour::Red);
    for (int v = 0; v < 5; ++v) {
        CHECK(green_link(k5, all_green, v).edges() == k5.link_graph(v).edges());
        CHECK(green_link(k5, all_red, v).edge_count() == 0);
    }

    Rng rng(0x6113);
    auto h = oracles::random_three_graph(rng, 7, 0.5);
    EdgeColouring mixed;
    for (int i = 0; i < h.edge_count(); ++i)
        mixed.colour_of.push_back(rng.below(2) ? EdgeColour::Green : EdgeColour::Red);
    for (int v = 0; v < 7; ++v) {
        Graph gl = green_link(h, mixed, v);
        // oracle: direct facet scan
        for (int i = 0; i < h.edge_count(); ++i) {
            const Triple& t = h.edge(i);
            bool has_v = std::find(t.begin(), t.end(), v) != t.end();
            if (!has_v) continue;
            int a = -1, b = -1;
            for (int w : t)
                if (w != v) (a < 0 ? a : b) = w;
            CHECK(gl.adjacent(a, b) == (mixed.colour_of[i] == EdgeColour::Green));
        }
        // a green link is always a subgraph of the link
        Graph l = h.link_graph(v);
        for (const auto& e : gl.edges()) CHECK(l.adjacent(e[0], e[1]));
    }
}

TEST_CASE("merge_colouring is stable on tight components") {
    // distinct tight components have no touching cross pairs by definition
    auto h = two_component_extremal(10);
    for (uint64_t thr : {1u, 2u, 5u}) {
        auto res = merge_colouring(h, thr);
        CHECK(res.log.empty());
        CHECK(res.final_colour_count == 2);
    }
    auto k6 = complete_three_graph(6);
    auto res = merge_colouring(k6, 1);
    CHECK(res.log.empty());
    CHECK(res.final_colour_count == 1);
    // the single colour maps to Green
    for (auto c : res.colouring.colour_of) CHECK(c == EdgeColour::Green);
}

TEST_CASE("merge_colouring merges a bridged pair of colour classes") {
    // two complete lobes joined by two bridge edges; as tight components
    // collapse, the pre-bridge split is supplied explicitly
    std::vector<Triple> es;
    ThreeGraph lobe_a = complete_three_graph(4);
    for (const auto& t : lobe_a.edges()) es.push_back(t);
    for (int a = 4; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            for (int c = b + 1; c < 8; ++c) es.push_back({a, b, c});
    es.push_back({2, 3, 4});
    es.push_back({3, 4, 5});
    ThreeGraph h(8, es);
    REQUIRE(tight_components(h).components.size() == 1);

    std::vector<int> initial;
    for (int i = 0; i < h.edge_count(); ++i) {
        const Triple& t = h.edge(i);
        bool left = t == Triple{2, 3, 4} || t[2] <= 3;
        initial.push_back(left ? 0 : 1);
    }
    auto res = merge_colouring(h, 1, initial);
    REQUIRE(res.log.size() == 1);
    CHECK(res.log[0].colour_a == 0);
    CHECK(res.log[0].colour_b == 1);
    CHECK(res.log[0].touching_count == 1);  // {2,3,4} touches {3,4,5}
    CHECK(res.final_colour_count == 1);

    // with a higher threshold the single cross pair is not enough
    auto res2 = merge_colouring(h, 2, initial);
    CHECK(res2.log.empty());
    CHECK(res2.final_colour_count == 2);
}

TEST_CASE("merge termination bound") {
    Rng rng(0x3136);
    for (int t = 0; t < 5; ++t) {
        auto h = oracles::random_three_graph(rng, 8, 0.3);
        if (h.edge_count() == 0) continue;
        // random initial colouring with up to 6 colours
        std::vector<int> initial;
        for (int i = 0; i < h.edge_count(); ++i) initial.push_back(rng.below(6));
        auto res = merge_colouring(h, 2, initial);
        std::set<int> init_cols(initial.begin(), initial.end());
        CHECK(res.log.size() <= init_cols.size() - 1);
        // final cross-pair counts are all below the threshold
        std::map<std::pair<int, int>, uint64_t> cross;
        for (const auto& [i, j] : touching_pairs(h)) {
            int a = res.raw_colour_of[i], b = res.raw_colour_of[j];
            if (a != b) cross[{std::min(a, b), std::max(a, b)}]++;
        }
        for (const auto& [pr, cnt] : cross) CHECK(cnt < 2);
    }
}

TEST_CASE("maximum matching equals the brute-force optimum") {
    Rng rng(0xb10550);
    for (int t = 0; t < 30; ++t) {
        auto g = oracles::random_graph(rng, 4 + rng.below(7), 0.35 + 0.3 * rng.unit());
        auto mate = maximum_matching(g);
        int size = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (mate[v] >= 0) {
                CHECK(mate[mate[v]] == v);
                CHECK(g.adjacent(v, mate[v]));
                ++size;
            }
        }
        CHECK(size / 2 == oracles::brute_max_matching_size(g));
    }
}

TEST_CASE("maximum matching handles blossoms") {
    // C5: maximum matching 2
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto m = maximum_matching(c5);
    int size = 0;
    for (int v = 0; v < 5; ++v)
        if (m[v] >= 0) ++size;
    CHECK(size / 2 == 2);

    // two triangles joined by a path: classic contraction case
    Graph flower(8, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}, {6, 7}});
    auto m2 = maximum_matching(flower);
    int size2 = 0;
    for (int v = 0; v < 8; ++v)
        if (m2[v] >= 0) ++size2;
    CHECK(size2 / 2 == oracles::brute_max_matching_size(flower));

    // Petersen graph has a perfect matching
    std::vector<Pair> pet = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
    auto m3 = maximum_matching(Graph(10, pet));
    for (int v = 0; v < 10; ++v) CHECK(m3[v] >= 0);
}

TEST_CASE("match partition on a perfect-matching graph") {
    Graph g(6, {{0, 1}, {2, 3}, {4, 5}});
    for (double eps : {0.1, 0.5, 1.0}) {
        auto mp = match_partition(g, eps);
        CHECK(mp.z.size() == 6);
        CHECK(mp.b.empty());
        CHECK(mp.c.empty());
        CHECK(mp.d.empty());
        CHECK(mp.boundary_edge_count == 0);
        CHECK(mp.matching_z.size() == 3);
    }
}

TEST_CASE("match partition on the 5-leaf star") {
    // K_{1,5}: M is one edge, 4 leaves end up in B, no round fires at
    // eps = 1/2 (the only candidate is the centre, short of eps*n/2 = 1.5)
    std::vector<Pair> star;
    for (int leaf = 1; leaf <= 5; ++leaf) star.push_back({0, leaf});
    Graph g(6, star);
    auto mp = match_partition(g, 0.5);
    CHECK(mp.z.size() == 2);
    CHECK(mp.b.size() == 4);
    CHECK(mp.c.empty());
    CHECK(mp.boundary_edge_count == 4);  // leaves to the matched centre
    CHECK(static_cast<double>(mp.boundary_edge_count) <= 0.5 * 36);
}

TEST_CASE("match partition clauses hold on random graphs in regime") {
    Rng rng(0x3a7c);
    for (int t = 0; t < 20; ++t) {
        int n = 40 + rng.below(21);
        auto g = oracles::random_graph(rng, n, 0.05 + 0.9 * rng.unit());
        for (double eps : {0.1, 0.3}) {
            auto mp = match_partition(g, eps);
            CHECK(mp.z.size() + mp.b.size() + mp.c.size() + mp.d.size() ==
                  static_cast<size_t>(n));
            CHECK(mp.c.size() == mp.d.size());
            CHECK(mp.matching_cd.size() == mp.c.size());
            CHECK(2 * mp.matching_z.size() == mp.z.size());
            CHECK(static_cast<double>(mp.boundary_edge_count) <= eps * n * n);
        }
    }
}

TEST_CASE("match partition outside the regime reports the failed clause") {
    // triangle with eps*n/2 < 1: both matched endpoints qualify through the
    // single exposed vertex, so C meets D and the run must refuse
    Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(match_partition(tri, 0.1), MatchPartitionError);
    CHECK_THROWS_AS(match_partition(tri, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(match_partition(tri, 0.0), std::invalid_argument);
}
