#include "spansurf/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spansurf {

ThreeGraph complete_three_graph(int n) {
    if (n < 3) throw std::invalid_argument("complete_three_graph: n >= 3 required");
    std::vector<Triple> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) es.push_back({a, b, c});
    return ThreeGraph(n, std::move(es));
}

std::array<int, 3> tripartite_class_sizes(int n) {
    int third = n / 3;
    return {n - 2 * third, third, third};
}

ThreeGraph tripartite_extremal(int n) {
    if (n < 6) throw std::invalid_argument("tripartite_extremal: n >= 6 required");
    auto [ax, ay, az] = tripartite_class_sizes(n);
    auto cls = [&](int v) { return v < ax ? 0 : (v < ax + ay ? 1 : 2); };
    std::vector<Triple> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int cnt[3] = {0, 0, 0};
                ++cnt[cls(a)];
                ++cnt[cls(b)];
                ++cnt[cls(c)];
                bool keep = (cnt[0] == 2 && cnt[1] == 1) || (cnt[1] == 2 && cnt[2] == 1) ||
                            (cnt[2] == 2 && cnt[0] == 1);
                if (keep) es.push_back({a, b, c});
            }
    return ThreeGraph(n, std::move(es));
}

int parity_x_size(int n, int chi) {
    // least integer strictly exceeding (2n - 2chi)/3
    int num = 2 * n - 2 * chi;
    int q = num >= 0 ? num / 3 : -((-num + 2) / 3);
    return q + 1;
}

ThreeGraph parity_extremal(int n, int chi) {
    int x = parity_x_size(n, chi);
    if (x < 3 || x > n - 2)
        throw std::invalid_argument("parity_extremal: need 3 <= |X| <= n-2");
    std::vector<Triple> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int in_x = (a < x) + (b < x) + (c < x);
                if (in_x % 2 == 1) es.push_back({a, b, c});
            }
    return ThreeGraph(n, std::move(es));
}

ThreeGraph two_component_extremal(int n) {
    if (n < 5) throw std::invalid_argument("two_component_extremal: n >= 5 required");
    int x = n / 2;  // X = [0, x), Y = [x, n)
    std::vector<Triple> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int in_y = (a >= x) + (b >= x) + (c >= x);
                if (in_y % 2 == 1) es.push_back({a, b, c});
            }
    return ThreeGraph(n, std::move(es));
}

ThreeGraph single_tight_counterexample(int n) {
    if (n < 8 || n % 2 != 0)
        throw std::invalid_argument("single_tight_counterexample: n even, n >= 8 required");
    // u = 0, v = 1, X = [2, 2 + (n-2)/2), Y = the rest
    int x_end = 2 + (n - 2) / 2;
    std::vector<Triple> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                bool meets_x = (a >= 2 && a < x_end) || (b >= 2 && b < x_end) ||
                               (c >= 2 && c < x_end);
                bool meets_y = a >= x_end || b >= x_end || c >= x_end;
                if (!(meets_x && meets_y)) es.push_back({a, b, c});
            }
    return ThreeGraph(n, std::move(es));
}

std::vector<std::vector<int>> r_partite_mod(int n, int r) {
    if (r < 3) throw std::invalid_argument("r_partite_mod: r >= 3 required");
    if (n % r != 0) throw std::invalid_argument("r_partite_mod: r must divide n");
    int per = n / r;
    auto cls = [&](int v) { return v / per + 1; };  // 1-based class index
    std::vector<std::vector<int>> out;
    std::vector<int> pick(r);
    // enumerate r-subsets of [n] in lexicographic order
    for (int i = 0; i < r; ++i) pick[i] = i;
    for (;;) {
        int s = 0;
        for (int v : pick) s += cls(v);
        if (s % r == 1) out.push_back(pick);
        int i = r - 1;
        while (i >= 0 && pick[i] == n - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

Complex torus_t9() {
    // 18 triangles of the 3x3 diagonal grid picture of the torus, 0-based.
    static const std::vector<Triple> facets = {
        {0, 3, 5}, {0, 2, 5}, {2, 4, 5}, {1, 2, 4}, {1, 3, 4}, {0, 1, 3},
        {3, 6, 8}, {3, 5, 8}, {5, 7, 8}, {4, 5, 7}, {3, 4, 6}, {4, 6, 7},
        {0, 2, 6}, {2, 6, 8}, {1, 2, 8}, {1, 7, 8}, {0, 1, 7}, {0, 6, 7}};
    return Complex(facets);
}

Complex projective_p12() {
    // 22 triangles of the square-with-antipodal-identification picture of
    // the projective plane, 0-based.
    static const std::vector<Triple> facets = {
        {0, 2, 3},  {0, 3, 6},  {3, 6, 7},  {3, 4, 7},  {3, 4, 5},  {1, 6, 7},
        {0, 1, 6},  {1, 4, 7},  {1, 4, 11}, {1, 2, 11}, {2, 10, 11}, {4, 10, 11},
        {0, 4, 10}, {0, 2, 10}, {0, 4, 8},  {0, 8, 9},  {0, 1, 9},  {5, 8, 9},
        {1, 5, 9},  {1, 2, 5},  {2, 3, 5},  {4, 5, 8}};
    return Complex(facets);
}

std::array<std::vector<int>, 3> t9_colour_classes() {
    return {std::vector<int>{0, 4, 8}, {1, 5, 6}, {2, 3, 7}};
}

std::array<std::vector<int>, 3> p12_colour_classes() {
    return {std::vector<int>{0, 5, 7, 11}, {1, 3, 8, 10}, {2, 4, 6, 9}};
}

Complex double_pyramid(int c) {
    if (c < 3) throw std::invalid_argument("double_pyramid: cycle length >= 3 required");
    std::vector<Triple> facets;
    int x = c, y = c + 1;
    for (int i = 0; i < c; ++i) {
        int j = (i + 1) % c;
        facets.push_back(make_triple(i, j, x));
        facets.push_back(make_triple(i, j, y));
    }
    return Complex(std::move(facets));
}

Graph double_ladder(int k) {
    if (k < 1) throw std::invalid_argument("double_ladder: k >= 1 required");
    int cols = k + 1;
    auto at = [&](int row, int col) { return row * cols + col; };
    std::vector<Pair> es;
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col + 1 < cols; ++col)
            es.push_back({at(row, col), at(row, col + 1)});
    for (int row = 0; row < 2; ++row)
        for (int col = 0; col < cols; ++col)
            es.push_back({at(row, col), at(row + 1, col)});
    return Graph(3 * cols, std::move(es));
}

Absorber build_absorber(int k, const std::vector<int>& labels) {
    if (k < 1) throw std::invalid_argument("build_absorber: k >= 1 required");
    const int cols = k + 1;
    if (static_cast<int>(labels.size()) != 4 * cols)
        throw std::invalid_argument("build_absorber: need 4(k+1) labels");
    {
        std::set<int> uniq(labels.begin(), labels.end());
        if (static_cast<int>(uniq.size()) != 4 * cols)
            throw std::invalid_argument("build_absorber: labels must be distinct");
    }
    Absorber a;
    a.capacity = k;
    a.top.assign(labels.begin(), labels.begin() + cols);
    a.mid.assign(labels.begin() + cols, labels.begin() + 2 * cols);
    a.bot.assign(labels.begin() + 2 * cols, labels.begin() + 3 * cols);
    a.t.assign(labels.begin() + 3 * cols, labels.end());

    std::vector<Triple> facets;
    // slot j (1-based) sits between ladder columns j-1 and j with centre
    // t_j; its square contributes six facets
    for (int j = 1; j <= k; ++j) {
        int c = a.t[j - 1];
        int al = a.top[j - 1], ar = a.top[j];
        int bl = a.mid[j - 1], br = a.mid[j];
        int cl = a.bot[j - 1], cr = a.bot[j];
        facets.push_back(make_triple(al, ar, c));
        facets.push_back(make_triple(cl, cr, c));
        facets.push_back(make_triple(al, bl, c));
        facets.push_back(make_triple(bl, cl, c));
        facets.push_back(make_triple(ar, br, c));
        facets.push_back(make_triple(br, cr, c));
        a.slots.push_back(j);
    }
    // outer apex t_{k+1} closes the sphere around the ladder boundary
    int apex = a.t[k];
    facets.push_back(make_triple(apex, a.mid[0], a.top[0]));
    facets.push_back(make_triple(apex, a.mid[0], a.bot[0]));
    for (int j = 0; j < k; ++j) {
        facets.push_back(make_triple(apex, a.top[j], a.top[j + 1]));
        facets.push_back(make_triple(apex, a.bot[j], a.bot[j + 1]));
    }
    facets.push_back(make_triple(apex, a.top[k], a.mid[k]));
    facets.push_back(make_triple(apex, a.bot[k], a.mid[k]));

    a.sphere = Complex(std::move(facets));
    a.green_e = make_triple(apex, a.mid[0], a.top[0]);
    a.green_f = make_triple(apex, a.mid[0], a.bot[0]);
    return a;
}

Complex absorb(const Absorber& a, const std::vector<int>& absorbees) {
    if (static_cast<int>(absorbees.size()) > a.capacity)
        throw std::invalid_argument("absorb: more absorbees than capacity");
    {
        std::set<int> uniq(absorbees.begin(), absorbees.end());
        if (uniq.size() != absorbees.size())
            throw std::invalid_argument("absorb: repeated absorbee");
        for (int v : a.sphere.vertices())
            if (uniq.count(v))
                throw std::invalid_argument("absorb: absorbee collides with sphere vertex");
    }
    std::set<Triple> facets(a.sphere.facets().begin(), a.sphere.facets().end());
    for (size_t i = 0; i < absorbees.size(); ++i) {
        int j = a.slots[i];  // ascending slot assignment
        int v = absorbees[i];
        int c = a.t[j - 1];
        int al = a.top[j - 1], ar = a.top[j];
        int bl = a.mid[j - 1], br = a.mid[j];
        int cl = a.bot[j - 1], cr = a.bot[j];
        facets.erase(make_triple(al, ar, c));
        facets.erase(make_triple(cl, cr, c));
        facets.erase(make_triple(al, bl, c));
        facets.erase(make_triple(bl, cl, c));
        facets.erase(make_triple(ar, br, c));
        facets.erase(make_triple(br, cr, c));
        // upper pyramid over the new vertex
        facets.insert(make_triple(al, ar, v));
        facets.insert(make_triple(al, bl, v));
        facets.insert(make_triple(bl, br, v));
        facets.insert(make_triple(ar, br, v));
        // lower pyramid over the displaced t_j
        facets.insert(make_triple(bl, br, c));
        facets.insert(make_triple(bl, cl, c));
        facets.insert(make_triple(cl, cr, c));
        facets.insert(make_triple(br, cr, c));
    }
    return Complex(std::vector<Triple>(facets.begin(), facets.end()));
}

}  // namespace spansurf
