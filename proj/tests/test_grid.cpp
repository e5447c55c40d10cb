#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "sfh/grid.hpp"

using namespace sfh;

namespace {

GridDiagram unknot2() { return make_diagram(2, {0, 1}, {1, 0}); }
// left-handed torus grids with O on the diagonal
GridDiagram trefoil_lh() { return make_diagram(5, {2, 3, 4, 0, 1}, {0, 1, 2, 3, 4}); }
GridDiagram trefoil_rh() { return mirror(trefoil_lh()); }
GridDiagram figure8() { return make_diagram(6, {3, 4, 2, 1, 5, 0}, {5, 1, 0, 3, 2, 4}); }
GridDiagram cinquefoil() { return mirror(make_diagram(7, {2, 3, 4, 5, 6, 0, 1}, {0, 1, 2, 3, 4, 5, 6})); }

LaurentPoly poly(std::initializer_list<std::pair<int, long long>> pairs) {
    LaurentPoly p;
    for (const auto& [e, c] : pairs) p.set_coeff(e, c);
    return p;
}

// boundary-of-boundary vanishes, checked state by state over GF(2)
void check_d_squared_zero(const GridDiagram& g) {
    for (const GridState& s : enumerate_states(g)) {
        std::map<std::uint64_t, int> acc;
        for (const GridState& y : boundary_targets(g, s))
            for (const GridState& z : boundary_targets(g, y)) acc[z.bits] ^= 1;
        for (const auto& [bits, parity] : acc) CHECK(parity == 0);
    }
}

}  // namespace

TEST_SUITE_BEGIN("grid");

TEST_CASE("diagram validation names the violated invariant") {
    CHECK_THROWS_WITH_AS(make_diagram(0, {}, {}), "grid size must be positive",
                         std::invalid_argument);
    CHECK_THROWS_AS(make_diagram(2, {0, 0}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_diagram(2, {0, 1}, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_diagram(2, {0, 1}, {0, 1}), std::invalid_argument);  // shared cells
    // two-component link
    std::string why;
    CHECK_FALSE(is_valid_diagram(GridDiagram{4, {1, 0, 3, 2}, {0, 1, 2, 3}}, &why));
    CHECK(why.find("2 components") != std::string::npos);
    CHECK(is_valid_diagram(unknot2()));
}

TEST_CASE("state enumeration is exhaustive and lexicographic") {
    CHECK(enumerate_states(unknot2()).size() == 2);
    GridDiagram g5 = trefoil_lh();
    const auto s5 = enumerate_states(g5);
    CHECK(s5.size() == 120);
    CHECK(s5.front().to_perm() == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(s5.back().to_perm() == std::vector<int>{4, 3, 2, 1, 0});
    std::set<std::uint64_t> distinct;
    for (const auto& s : s5) distinct.insert(s.bits);
    CHECK(distinct.size() == 120);
    CHECK(enumerate_states(figure8()).size() == 720);
    CHECK_THROWS_AS(enumerate_states(GridDiagram{0, {}, {}}), std::invalid_argument);
}

TEST_CASE("unknot bigradings") {
    const GridDiagram g = unknot2();
    const auto id = GridState::from_perm({0, 1});
    const auto sw = GridState::from_perm({1, 0});
    CHECK(state_bigrading(g, id) == Bigrading{0, 0});
    CHECK(state_bigrading(g, sw) == Bigrading{-1, -1});
    // the state through the X markers always has a well-defined grading
    CHECK_NOTHROW(state_bigrading(trefoil_lh(), GridState::from_perm(trefoil_lh().x)));
}

TEST_CASE("half-integer Alexander grading rejects a non-knot diagram") {
    // validation skipped on purpose: a two-component link
    const GridDiagram link{4, {1, 0, 3, 2}, {0, 1, 2, 3}};
    CHECK_THROWS_AS(state_bigrading(link, GridState::from_perm({0, 1, 2, 3})),
                    std::invalid_argument);
}

TEST_CASE("unknot differential vanishes") {
    const GridDiagram g = unknot2();
    for (const GridState& s : enumerate_states(g)) CHECK(boundary_targets(g, s).empty());
    CHECK(homology(g).total_dim() == 2);
    CHECK(homology(g).dim({0, 0}) == 1);
    CHECK(homology(g).dim({-1, -1}) == 1);
}

TEST_CASE("trefoil differential is nonzero and homogeneous") {
    const GridDiagram g = trefoil_lh();
    const TildeComplex c = tilde_differential(g);  // throws if inhomogeneous
    bool nonzero = false;
    for (const auto& [bg, rows] : c.boundary)
        for (const auto& r : rows)
            if (!r.empty()) nonzero = true;
    CHECK(nonzero);
}

TEST_CASE("d squared is zero on the bundled diagrams") {
    check_d_squared_zero(unknot2());
    check_d_squared_zero(trefoil_lh());
    check_d_squared_zero(figure8());
}

TEST_CASE("trefoil homology") {
    const BigradedGroup h = homology(trefoil_lh());
    CHECK(h.total_dim() == 48);  // 3 * 2^4
    // full table from the brute-force run
    const std::map<Bigrading, long long> expected{{{-4, -5}, 1}, {{-3, -4}, 5}, {{-2, -3}, 11},
                                                  {{-1, -2}, 14}, {{0, -1}, 11}, {{1, 0}, 5},
                                                  {{2, 1}, 1}};
    CHECK(h.dims() == expected);
    const HfkTop top = hfk_top(h);
    CHECK(top.genus == 1);
    CHECK(top.top_rank == 1);
    CHECK(top.top_maslov_dims == std::map<int, long long>{{2, 1}});
}

TEST_CASE("mirror flips the top Maslov grading but not rank data") {
    const HfkTop rh = hfk_top(trefoil_rh());
    CHECK(rh.genus == 1);
    CHECK(rh.top_rank == 1);
    CHECK(rh.top_maslov_dims == std::map<int, long long>{{0, 1}});
    const HfkTop cq = hfk_top(cinquefoil());
    CHECK(cq.genus == 2);
    CHECK(cq.top_rank == 1);
    CHECK(cq.top_maslov_dims == std::map<int, long long>{{0, 1}});
}

TEST_CASE("figure-eight homology") {
    const GridDiagram g = figure8();
    const BigradedGroup h = homology(g);
    CHECK(h.total_dim() == 160);  // 5 * 2^5
    const HfkTop top = hfk_top(h);
    CHECK(top.genus == 1);
    CHECK(top.top_rank == 1);
    CHECK(alexander_from_euler(g, h) == poly({{1, -1}, {0, 3}, {-1, -1}}));
}

TEST_CASE("alexander polynomials from the Euler characteristic") {
    CHECK(alexander_from_euler(unknot2()) == LaurentPoly(1));
    CHECK(alexander_from_euler(trefoil_lh()) == poly({{1, 1}, {0, -1}, {-1, 1}}));
    CHECK(alexander_from_euler(trefoil_rh()) == poly({{1, 1}, {0, -1}, {-1, 1}}));
    CHECK(alexander_from_euler(cinquefoil()) ==
          poly({{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}}));
}

TEST_CASE("max Alexander grading over trefoil states is at least the genus") {
    const GridDiagram g = trefoil_lh();
    int best = -100;
    for (const GridState& s : enumerate_states(g))
        best = std::max(best, state_bigrading(g, s).alexander);
    CHECK(best >= 1);
}

TEST_CASE("random diagrams: knot gradings are integers and d^2 = 0") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 8; ++trial) {
        const GridDiagram g = random_knot_diagram(5, rng);
        for (const GridState& s : enumerate_states(g)) CHECK_NOTHROW(state_bigrading(g, s));
        check_d_squared_zero(g);
        const LaurentPoly alex = alexander_from_euler(g);
        CHECK(alex == alex.reversed());
    }
}

TEST_CASE("stabilization preserves the knot invariants") {
    std::mt19937_64 rng(11);
    const GridDiagram base = trefoil_lh();
    for (int c = 0; c < base.size; ++c) {
        const GridDiagram stab = stabilize(base, c);
        CHECK(stab.size == base.size + 1);
        const BigradedGroup h = homology(stab);
        CHECK(h.total_dim() == 96);  // one more stabilization factor
        const HfkTop top = hfk_top(h);
        CHECK(top.genus == 1);
        CHECK(top.top_rank == 1);
        CHECK(alexander_from_euler(stab, h) == alexander_from_euler(base));
    }
    const GridDiagram g = random_knot_diagram(4, rng);
    const GridDiagram stab = stabilize(g, 2);
    CHECK(hfk_top(stab).genus == hfk_top(g).genus);
    CHECK_THROWS_AS(stabilize(g, 9), std::invalid_argument);
}

TEST_CASE("mirror of the mirror is the original") {
    const GridDiagram g = figure8();
    CHECK(mirror(mirror(g)) == g);
    CHECK(is_valid_diagram(mirror(g)));
}

TEST_SUITE_END();
