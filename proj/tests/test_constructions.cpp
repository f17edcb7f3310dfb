#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "spansurf/constructions.hpp"
#include "spansurf/surface.hpp"
#include "spansurf/tight.hpp"

using namespace spansurf;

TEST_CASE("tripartite construction") {
    auto h9 = tripartite_extremal(9);
    CHECK(h9.min_codegree() == 2);
    auto part = tight_components(h9);
    REQUIRE(part.components.size() == 3);
    for (const auto& c : part.components) CHECK(c.vertices.size() == 6);

    // n=6 edge count against a direct pattern enumeration
    auto h6 = tripartite_extremal(6);
    auto [ax, ay, az] = tripartite_class_sizes(6);
    int expect = ax * (ax - 1) / 2 * ay + ay * (ay - 1) / 2 * az + az * (az - 1) / 2 * ax;
    CHECK(h6.edge_count() == expect);

    CHECK_THROWS_AS(tripartite_extremal(5), std::invalid_argument);
}

TEST_CASE("min codegree closed forms across the range") {
    for (int n = 6; n <= 40; ++n)
        CHECK(tripartite_extremal(n).min_codegree() == n / 3 - 1);
    for (int n = 5; n <= 40; ++n)
        CHECK(two_component_extremal(n).min_codegree() == (n - 3) / 2);
}

TEST_CASE("parity construction") {
    CHECK(parity_x_size(20, 0) == 14);  // least integer exceeding 40/3
    CHECK(parity_extremal(20, 2).min_codegree() == 6);

    // impossibility inequality of the facet count argument: 2n-2chi < 3|X|
    for (int chi : {2, 1, 0, -2})
        for (int n = 6; n <= 40; ++n) {
            int x = parity_x_size(n, chi);
            if (x < 3 || x > n - 2) continue;
            CHECK(2 * n - 2 * chi < 3 * x);
        }

    // below the size constraints the generator refuses
    CHECK_THROWS_AS(parity_extremal(6, 0), std::invalid_argument);
}

TEST_CASE("two-component construction") {
    auto h10 = two_component_extremal(10);
    CHECK(h10.min_codegree() == 3);
    auto part = tight_components(h10);
    REQUIRE(part.components.size() == 2);
    // XXY-type component spans everything, YYY-type spans the Y block
    CHECK(part.components[0].vertices.size() == 10);
    CHECK(part.components[1].vertices == std::vector<int>{5, 6, 7, 8, 9});
    CHECK(two_component_extremal(11).min_codegree() == 4);
    CHECK_THROWS_AS(two_component_extremal(4), std::invalid_argument);
}

TEST_CASE("single tight component counterexample") {
    auto h10 = single_tight_counterexample(10);
    CHECK(tight_components(h10).components.size() == 1);
    // codegree of a pair inside X is |X| = (n-2)/2: the rest of X plus u,v
    auto h8 = single_tight_counterexample(8);  // X = {2,3,4}
    CHECK(h8.codegree(2, 3) == 3);
    CHECK(h8.codegree(2, 4) == 3);
    // cross pairs have codegree 0 (every completion would meet both sides)
    CHECK(h8.codegree(2, 5) == 0);
    CHECK_THROWS_AS(single_tight_counterexample(9), std::invalid_argument);
    CHECK_THROWS_AS(single_tight_counterexample(6), std::invalid_argument);
}

TEST_CASE("r-partite mod construction") {
    auto sets9 = r_partite_mod(9, 3);
    std::vector<Triple> es;
    for (const auto& s : sets9) es.push_back(make_triple(s[0], s[1], s[2]));
    ThreeGraph h(9, es);
    auto part = tight_components(h);
    CHECK(part.components.size() == 3);  // patterns {1,1,2}, {1,3,3}, {2,2,3}
    for (const auto& c : part.components) {
        CHECK(c.vertices.size() < 9);  // none spanning
        // all edges of one component share one class-multiset pattern
        std::set<std::multiset<int>> patterns;
        for (int i : c.edge_indices) {
            std::multiset<int> pat;
            for (int v : h.edge(i)) pat.insert(v / 3 + 1);
            patterns.insert(pat);
        }
        CHECK(patterns.size() == 1);
    }

    // r=4, n=8: edge count equals direct enumeration with the mod rule
    auto sets8 = r_partite_mod(8, 4);
    uint64_t expect = 0;
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            for (int c = b + 1; c < 8; ++c)
                for (int d = c + 1; d < 8; ++d)
                    if ((a / 2 + b / 2 + c / 2 + d / 2 + 4) % 4 == 1) ++expect;
    CHECK(sets8.size() == expect);

    CHECK_THROWS_AS(r_partite_mod(10, 4), std::invalid_argument);
    CHECK_THROWS_AS(r_partite_mod(4, 2), std::invalid_argument);
}

TEST_CASE("fixed torus and projective-plane complexes") {
    CHECK(classify(torus_t9()) == SurfaceType::torus());
    CHECK(classify(projective_p12()) == SurfaceType::projective_plane());

    auto check_three_partite = [](const Complex& k, const std::array<std::vector<int>, 3>& cls) {
        std::vector<int> colour_of(k.vertices().back() + 1, -1);
        for (int c = 0; c < 3; ++c)
            for (int v : cls[c]) colour_of[v] = c;
        for (const auto& t : k.facets()) {
            std::set<int> seen{colour_of[t[0]], colour_of[t[1]], colour_of[t[2]]};
            CHECK(seen == std::set<int>{0, 1, 2});
        }
    };
    check_three_partite(torus_t9(), t9_colour_classes());
    check_three_partite(projective_p12(), p12_colour_classes());
}

TEST_CASE("double pyramid") {
    auto dp3 = double_pyramid(3);
    CHECK(dp3.vertices().size() == 5);
    CHECK(classify(dp3) == SurfaceType::sphere());
    for (int k = 2; k <= 6; ++k) {
        auto dp = double_pyramid(2 * k);
        CHECK(dp.vertices().size() == 2 * k + 2);
        CHECK(classify(dp) == SurfaceType::sphere());
    }
    auto dp50 = double_pyramid(50);
    CHECK(classify(dp50) == SurfaceType::sphere());
    CHECK(dp50.facet_count() == 100);
    CHECK(dp50.facet_count() == 2 * static_cast<int>(dp50.vertices().size()) - 4);
    CHECK_THROWS_AS(double_pyramid(2), std::invalid_argument);
}

TEST_CASE("double ladder") {
    auto d1 = double_ladder(1);
    CHECK(d1.vertex_count() == 6);
    CHECK(d1.edge_count() == 3 * 1 + 2 * 2);  // horizontals + verticals
    CHECK(double_ladder(4).vertex_count() == 15);

    // bipartite: 2-colourable by BFS
    for (int k : {1, 2, 3, 4, 5}) {
        auto g = double_ladder(k);
        std::vector<int> col(g.vertex_count(), -1);
        std::vector<int> stack{0};
        col[0] = 0;
        bool ok = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbours(v)) {
                if (col[u] == -1) {
                    col[u] = 1 - col[v];
                    stack.push_back(u);
                } else if (col[u] == col[v])
                    ok = false;
            }
        }
        CHECK(ok);
    }
    CHECK_THROWS_AS(double_ladder(0), std::invalid_argument);
}

TEST_CASE("absorber construction") {
    for (int k = 1; k <= 5; ++k) {
        std::vector<int> labels(4 * (k + 1));
        for (size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i);
        Absorber a = build_absorber(k, labels);
        CHECK(static_cast<int>(a.sphere.vertices().size()) == 4 * (k + 1));
        CHECK(classify(a.sphere) == SurfaceType::sphere());
        CHECK(a.sphere.has_facet(a.green_e));
        CHECK(a.sphere.has_facet(a.green_f));
        // both designated facets contain the outer apex t_{k+1}
        int apex = a.t.back();
        CHECK(std::count(a.green_e.begin(), a.green_e.end(), apex) == 1);
        CHECK(std::count(a.green_f.begin(), a.green_f.end(), apex) == 1);
    }
    // k=1 gives the order-8 absorber
    std::vector<int> l8 = {0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(build_absorber(1, l8).sphere.vertices().size() == 8);

    std::vector<int> collide = {0, 1, 2, 3, 4, 5, 6, 0};
    CHECK_THROWS_AS(build_absorber(1, collide), std::invalid_argument);
}

TEST_CASE("absorption rewiring") {
    std::vector<int> labels(20);
    for (int i = 0; i < 20; ++i) labels[i] = i;
    Absorber a = build_absorber(4, labels);

    CHECK(absorb(a, {}).facets() == a.sphere.facets());

    // two absorbees go to slots 1 and 2: upper pyramids over the new
    // vertices, lower pyramids over the displaced t_1, t_2
    Complex two = absorb(a, {100, 101});
    CHECK(classify(two) == SurfaceType::sphere());
    int a0 = a.top[0], a1 = a.top[1], b0 = a.mid[0], b1 = a.mid[1];
    int c0 = a.bot[0], c1 = a.bot[1], t1 = a.t[0];
    CHECK(two.has_facet(make_triple(a0, a1, 100)));
    CHECK(two.has_facet(make_triple(b0, b1, 100)));
    CHECK(two.has_facet(make_triple(b0, b1, t1)));
    CHECK(two.has_facet(make_triple(c0, c1, t1)));
    CHECK_FALSE(two.has_facet(make_triple(a0, a1, t1)));
    CHECK(two.has_facet(a.green_e));
    CHECK(two.has_facet(a.green_f));

    // every subset of a 4-vertex pool keeps the absorber a sphere
    const std::vector<int> pool = {100, 101, 102, 103};
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> u;
        for (int i = 0; i < 4; ++i)
            if (mask & (1 << i)) u.push_back(pool[i]);
        Complex s = absorb(a, u);
        CHECK(classify(s) == SurfaceType::sphere());
        CHECK(s.has_facet(a.green_e));
        CHECK(s.has_facet(a.green_f));
        CHECK(s.vertices().size() == 20 + u.size());
    }

    CHECK_THROWS_AS(absorb(a, {0}), std::invalid_argument);  // collides with the sphere
    std::vector<int> l8 = {0, 1, 2, 3, 4, 5, 6, 7};
    Absorber small = build_absorber(1, l8);
    CHECK_THROWS_AS(absorb(small, {100, 101}), std::invalid_argument);  // overflow
}
