#pragma once

#include <vector>

#include "spansurf/surface.hpp"
#include "spansurf/three_graph.hpp"

namespace spansurf {

// All generators place their vertex classes on consecutive index blocks,
// starting with X at 0; tests address classes through the size helpers.

ThreeGraph complete_three_graph(int n);

// Classes X, Y, Z of sizes (n - 2*floor(n/3), floor(n/3), floor(n/3)) on
// consecutive blocks; edges are the XXY, YYZ and ZZX patterns. Minimum
// codegree floor(n/3) - 1, three tight components.
ThreeGraph tripartite_extremal(int n);  // n >= 6
std::array<int, 3> tripartite_class_sizes(int n);

// X of size parity_x_size(n, chi) on the first block; edges are the
// triples meeting X in an odd number of vertices. Minimum codegree
// |Y| - 1 = ceil((n + 2*chi)/3) - 2 once X outweighs Y.
ThreeGraph parity_extremal(int n, int chi);
int parity_x_size(int n, int chi);  // least integer exceeding (2n-2chi)/3

// X of size floor(n/2), Y the rest; edges are the triples meeting Y in an
// odd number of vertices. Minimum codegree floor((n-3)/2), exactly two
// tight components (YYY-type and XXY-type).
ThreeGraph two_component_extremal(int n);  // n >= 5

// Vertices u = 0, v = 1 plus X and Y of size (n-2)/2 each; the complete
// 3-graph minus all edges meeting both X and Y. One tight component.
ThreeGraph single_tight_counterexample(int n);  // n even, n >= 8

// r classes of size n/r; an r-set is kept iff its class indices (1-based)
// sum to 1 mod r. Returned as plain sorted r-sets since r may exceed 3.
std::vector<std::vector<int>> r_partite_mod(int n, int r);

// Fixed facet lists: a 9-vertex torus (3x3 diagonal grid) and a 12-vertex
// projective plane. Both are 3-partite; the colour classes are exposed for
// the degeneracy tests.
Complex torus_t9();
Complex projective_p12();
std::array<std::vector<int>, 3> t9_colour_classes();
std::array<std::vector<int>, 3> p12_colour_classes();

// Cycle v_0..v_{c-1} plus apexes c and c+1; every cycle edge forms a facet
// with each apex. A sphere for every c >= 3.
Complex double_pyramid(int cycle_length);

// The 3-row by (k+1)-column grid graph with k spaces: horizontal edges in
// each row, vertical edges in each column. Bipartite. Rows are laid out
// top row 0..k, middle row k+1..2k+1, bottom row 2k+2..3k+2.
Graph double_ladder(int k);  // k >= 1

// Absorber gadget: a sphere on 4(k+1) vertices built over the double
// ladder, with k rung slots that can each take one extra vertex while the
// complex stays a sphere and keeps its two designated facets through the
// outer apex t_{k+1}.
struct Absorber {
    Complex sphere;
    Triple green_e{};  // designated facets, both through t_{k+1}
    Triple green_f{};
    std::vector<int> slots;  // slot j (ascending) is keyed to middle vertex t_{j+1}
    int capacity = 0;

    // labelling used by absorb(); top/mid/bot are the ladder rows, t the
    // middle vertices t_1..t_{k+1}
    std::vector<int> top, mid, bot, t;
};

// labels = 3(k+1) ladder vertices (top row, then middle row, then bottom
// row) followed by t_1..t_{k+1}; all 4(k+1) must be distinct.
Absorber build_absorber(int k, const std::vector<int>& labels);

// Insert each absorbee at a distinct rung slot (ascending slot order): the
// slot square splits into an upper pyramid over the new vertex and a lower
// pyramid over the displaced t_j. Result is a sphere on
// V(sphere) + absorbees containing both designated facets.
Complex absorb(const Absorber& a, const std::vector<int>& absorbees);

}  // namespace spansurf
