#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sfh/bigraded.hpp"
#include "sfh/laurent.hpp"

namespace sfh {

// Toroidal n x n grid presentation of a knot. x[i] (resp. o[i]) is the row
// of the X (resp. O) marker in column i. A valid diagram has x and o
// bijections on {0..n-1}, no cell carrying both markers, and a single
// knot component under the vertical X->O / horizontal O->X connection rule.
struct GridDiagram {
    int size = 0;
    std::vector<int> x;
    std::vector<int> o;

    bool operator==(const GridDiagram&) const = default;
};

// Throws std::invalid_argument naming the violated invariant.
void validate_diagram(const GridDiagram& g);
bool is_valid_diagram(const GridDiagram& g, std::string* why = nullptr);
GridDiagram make_diagram(int size, std::vector<int> x, std::vector<int> o);

// One generator of the grid complex: a permutation assigning a row to each
// column, packed four bits per column (so size <= 16).
struct GridState {
    std::uint64_t bits = 0;
    int size = 0;

    int row(int column) const { return int((bits >> (4 * column)) & 0xF); }
    std::vector<int> to_perm() const;
    static GridState from_perm(const std::vector<int>& perm);

    auto operator<=>(const GridState&) const = default;
};

// All n! states in lexicographic order of the underlying permutation.
// Rejects size 0 and sizes too large to enumerate.
std::vector<GridState> enumerate_states(const GridDiagram& g);

// (Maslov, Alexander) of a state, via the planar point-count pairing J:
//   M_O(s) = J(s,s) - 2 J(s,O) + J(O,O) + 1,
//   A(s)   = (M_O(s) - M_X(s) - (n-1)) / 2.
// Throws if A is not an integer (the diagram does not present a knot).
Bigrading state_bigrading(const GridDiagram& g, const GridState& s);

// States y with nonzero coefficient in the fully blocked differential of s:
// count rectangles from s to y whose interior misses all X markers, all O
// markers and all components of s; keep y when the count is odd.
std::vector<GridState> boundary_targets(const GridDiagram& g, const GridState& s);

// The fully blocked complex, bucketed by bigrading. boundary[i] within a
// bucket lists the packed targets of bucket state i (all of them living in
// the bucket one Maslov grading below, same Alexander grading).
struct TildeComplex {
    std::map<Bigrading, std::vector<GridState>> buckets;
    std::map<Bigrading, std::vector<std::vector<std::uint64_t>>> boundary;
};

TildeComplex tilde_differential(const GridDiagram& g);

// Homology of the fully blocked complex over GF(2). Equals HFK-hat of the
// knot tensored with (n-1) copies of the two-dimensional factor with
// generators in bigradings (0,0) and (-1,-1).
BigradedGroup homology(const GridDiagram& g);
BigradedGroup homology(const TildeComplex& c);

struct HfkTop {
    int genus = 0;
    long long top_rank = 0;
    std::map<int, long long> top_maslov_dims;  // Maslov -> dim at Alexander = genus
};

// Genus and top Alexander-graded summand read off the fully blocked
// homology; the stabilization factor does not raise the top grading.
HfkTop hfk_top(const BigradedGroup& hom);
HfkTop hfk_top(const GridDiagram& g);

// Alexander polynomial from the graded Euler characteristic: divides
// euler(homology) exactly by (1 - t^{-1})^(n-1) and normalizes the result
// symmetric with positive value at t = 1. Non-exact division means the
// grading conventions are broken and is a hard failure.
LaurentPoly alexander_from_euler(const GridDiagram& g, const BigradedGroup& hom);
LaurentPoly alexander_from_euler(const GridDiagram& g);

// Reflection across a vertical axis; presents the mirror knot.
GridDiagram mirror(const GridDiagram& g);

// Elementary stabilization splitting the X marker of the given column into
// an X/O/X corner block. Returns a valid diagram of size n+1 presenting the
// same knot.
GridDiagram stabilize(const GridDiagram& g, int column);

// Rejection-samples marker permutations until they present a single knot.
GridDiagram random_knot_diagram(int size, std::mt19937_64& rng);

}  // namespace sfh
