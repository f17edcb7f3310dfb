#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "spansurf/constructions.hpp"
#include "spansurf/surface.hpp"

using namespace spansurf;

namespace {

Complex tetrahedron(int a = 0, int b = 1, int c = 2, int d = 3) {
    return Complex({make_triple(a, b, c), make_triple(a, b, d), make_triple(a, c, d),
                    make_triple(b, c, d)});
}

// octahedron whose antipodal vertex pairs are (a0,b0), (a1,b1), (a2,b2)
Complex octahedron(int a0, int a1, int a2, int b0, int b1, int b2) {
    std::vector<Triple> fs;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                fs.push_back(make_triple(i ? b0 : a0, j ? b1 : a1, k ? b2 : a2));
    return Complex(fs);
}

Complex relabel_complex(const Complex& k, const std::vector<int>& perm) {
    std::vector<Triple> fs;
    for (const auto& t : k.facets())
        fs.push_back(make_triple(perm[t[0]], perm[t[1]], perm[t[2]]));
    return Complex(fs);
}

}  // namespace

TEST_CASE("closed-surface recognition accepts the standard examples") {
    CHECK(is_closed_surface(tetrahedron()).closed);
    CHECK(is_closed_surface(torus_t9()).closed);
    CHECK(is_closed_surface(projective_p12()).closed);
    CHECK(is_closed_surface(octahedron(0, 1, 2, 3, 4, 5)).closed);
}

TEST_CASE("recognition rejections carry the first failed condition") {
    // boundary created: one facet removed
    Complex open({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    auto r = is_closed_surface(open);
    CHECK_FALSE(r.closed);
    CHECK(r.failure == SurfaceCheck::Failure::PairDegree);
    CHECK(r.witness_pair[0] >= 0);

    // pseudo-surface: two tetrahedra sharing vertex 0
    std::vector<Triple> pinch = tetrahedron(0, 1, 2, 3).facets();
    Complex second = tetrahedron(0, 4, 5, 6);
    for (const auto& t : second.facets()) pinch.push_back(t);
    auto p = is_closed_surface(Complex(pinch));
    CHECK_FALSE(p.closed);
    CHECK(p.failure == SurfaceCheck::Failure::VertexLink);
    CHECK(p.witness_vertex == 0);

    // two disjoint tetrahedra: every link fine, adjacency disconnected
    std::vector<Triple> two = tetrahedron(0, 1, 2, 3).facets();
    Complex other = tetrahedron(4, 5, 6, 7);
    for (const auto& t : other.facets()) two.push_back(t);
    auto d = is_closed_surface(Complex(two));
    CHECK_FALSE(d.closed);
    CHECK(d.failure == SurfaceCheck::Failure::Disconnected);

    CHECK_THROWS_AS(is_closed_surface(Complex(std::vector<Triple>{})), std::invalid_argument);
}

TEST_CASE("Euler characteristic") {
    for (int c : {3, 4, 7, 10}) {
        Complex dp = double_pyramid(c);
        CHECK(euler_characteristic(dp) == 2);
        CHECK(static_cast<int>(dp.vertices().size()) == c + 2);
        CHECK(dp.facet_count() == 2 * c);
        CHECK(static_cast<int>(dp.pairs().size()) == 3 * c);
    }
    CHECK(euler_characteristic(torus_t9()) == 0);
    CHECK(euler_characteristic(projective_p12()) == 1);
}

TEST_CASE("orientability") {
    CHECK(orientability(tetrahedron()));
    CHECK(orientability(torus_t9()));
    CHECK_FALSE(orientability(projective_p12()));
}

TEST_CASE("classification") {
    CHECK(classify(double_pyramid(4)) == SurfaceType::sphere());
    CHECK(classify(double_pyramid(9)) == SurfaceType::sphere());
    CHECK(classify(torus_t9()) == SurfaceType::torus());
    CHECK(classify(torus_t9()).name() == "torus-sum(1)");
    CHECK(classify(torus_t9()).display_name() == "torus");
    CHECK(classify(projective_p12()) == SurfaceType::projective_plane());
    CHECK(classify(projective_p12()).name() == "projective-sum(1)");
    Complex open({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    CHECK_THROWS_AS(classify(open), std::invalid_argument);
}

TEST_CASE("classification is invariant under vertex relabelling") {
    Rng rng(0x9e1abe1);
    for (const Complex& k : {torus_t9(), projective_p12(), double_pyramid(6)}) {
        int n = k.vertices().back() + 1;
        SurfaceType base = classify(k);
        for (int t = 0; t < 5; ++t) {
            auto perm = oracles::random_permutation(rng, n);
            CHECK(classify(relabel_complex(k, perm)) == base);
        }
    }
}

TEST_CASE("SurfaceType validates the classification invariants") {
    CHECK_THROWS_AS(SurfaceType::make(1, true), std::invalid_argument);   // odd orientable
    CHECK_THROWS_AS(SurfaceType::make(4, true), std::invalid_argument);   // chi > 2
    CHECK_THROWS_AS(SurfaceType::make(2, false), std::invalid_argument);  // chi > 1
    CHECK(SurfaceType::make(-2, true).name() == "torus-sum(2)");
    CHECK(SurfaceType::make(-1, false).name() == "projective-sum(3)");
}

TEST_CASE("spans") {
    auto k8 = complete_three_graph(8);
    CHECK(spans(double_pyramid(6), k8));  // 6 + 2 apexes = all 8 vertices
    auto k10 = complete_three_graph(10);
    CHECK_FALSE(spans(torus_t9(), k10));  // vertex 9 missed
    // a facet outside the host is a contract violation
    auto h = tripartite_extremal(9);
    CHECK_THROWS_AS(spans(double_pyramid(7), h), std::invalid_argument);
}

TEST_CASE("connected sum gluing") {
    // two vertex-disjoint tetrahedra through an octahedral tube
    Complex k1 = tetrahedron(0, 1, 2, 3);
    Complex k2 = tetrahedron(4, 5, 6, 7);
    Complex tube = octahedron(0, 1, 2, 4, 5, 6);
    Triple f1 = make_triple(0, 1, 2), f2 = make_triple(4, 5, 6);
    Complex glued = connected_sum_glue(k1, k2, tube, f1, f2);
    CHECK(classify(glued) == SurfaceType::sphere());
    CHECK(glued.facet_count() == 4 + 4 + 8 - 4);

    // sphere + torus = torus
    Complex t9 = torus_t9();
    Complex sph = tetrahedron(9, 10, 11, 12);
    Complex tube2 = octahedron(9, 10, 11, 0, 3, 5);
    Complex g2 = connected_sum_glue(sph, t9, tube2, make_triple(9, 10, 11), make_triple(0, 3, 5));
    CHECK(classify(g2) == SurfaceType::torus());

    // torus + torus = genus 2
    std::vector<int> shift(18);
    for (int i = 0; i < 18; ++i) shift[i] = i + 9;
    Complex t9b = relabel_complex(t9, shift);
    Complex tube3 = octahedron(0, 3, 5, 9, 12, 14);
    Complex g3 =
        connected_sum_glue(t9, t9b, tube3, make_triple(0, 3, 5), make_triple(9, 12, 14));
    CHECK(euler_characteristic(g3) == -2);
    CHECK(classify(g3) == SurfaceType::make(-2, true));
}

TEST_CASE("connected sum gluing reports the violated clause") {
    Complex k1 = tetrahedron(0, 1, 2, 3);
    Complex k2 = tetrahedron(4, 5, 6, 7);
    Complex tube = octahedron(0, 1, 2, 4, 5, 6);
    CHECK_THROWS_WITH_AS(
        connected_sum_glue(k1, k2, tube, make_triple(0, 1, 3), make_triple(4, 5, 6)),
        doctest::Contains("tube must contain"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        connected_sum_glue(k1, k2, tube, make_triple(4, 5, 6), make_triple(4, 5, 6)),
        doctest::Contains("not in K1"), std::invalid_argument);
    // a non-sphere tube is rejected: disjoint union of two tetrahedra
    std::vector<Triple> nt = tetrahedron(0, 1, 2, 8).facets();
    Complex ntb = tetrahedron(4, 5, 6, 9);
    for (const auto& t : ntb.facets()) nt.push_back(t);
    CHECK_THROWS_WITH_AS(
        connected_sum_glue(k1, k2, Complex(nt), make_triple(0, 1, 2), make_triple(4, 5, 6)),
        doctest::Contains("not a sphere"), std::invalid_argument);
}

TEST_CASE("closed surfaces satisfy the facet-count identities") {
    for (const Complex& k :
         {tetrahedron(), torus_t9(), projective_p12(), double_pyramid(12),
          octahedron(0, 1, 2, 3, 4, 5)}) {
        int v = static_cast<int>(k.vertices().size());
        int e = static_cast<int>(k.pairs().size());
        int f = k.facet_count();
        CHECK(3 * f == 2 * e);
        CHECK(f == 2 * v - 2 * euler_characteristic(k));
    }
}

TEST_CASE("Complex validates facets") {
    CHECK_THROWS_AS(Complex({{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Complex({{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);
}
