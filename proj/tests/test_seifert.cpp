#include "doctest.h"

#include <random>

#include "sfh/seifert.hpp"

using namespace sfh;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, long long>> pairs) {
    LaurentPoly p;
    for (const auto& [e, c] : pairs) p.set_coeff(e, c);
    return p;
}

Mat2 random_unimodular(std::mt19937_64& rng) {
    // product of elementary shears and sign flips
    std::uniform_int_distribution<int> shear(-2, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    Mat2 w = Mat2::identity();
    for (int step = 0; step < 4; ++step) {
        Mat2 e = Mat2::identity();
        if (coin(rng))
            e.m[0][1] = shear(rng);
        else
            e.m[1][0] = shear(rng);
        w = w * e;
    }
    if (coin(rng)) w.m[0][0] = -w.m[0][0], w.m[1][0] = -w.m[1][0];
    return w;
}

}  // namespace

TEST_SUITE_BEGIN("seifert");

TEST_CASE("family forms") {
    const auto [vr, vrp] = family_forms(1);
    CHECK(vr.matrix == Mat2{{{{1, 1}, {0, 0}}}});
    CHECK(vrp.matrix == Mat2{{{{1, 0}, {-1, 0}}}});
    CHECK(vr.basis_labels == std::array<std::string, 2>{"c1", "c2"});
    CHECK(vrp.basis_labels == std::array<std::string, 2>{"d1", "d2"});
    CHECK(family_forms(0).first.matrix == Mat2{{{{0, 1}, {0, 0}}}});
    CHECK(family_forms(-2).first.matrix == Mat2{{{{-2, 1}, {0, 0}}}});
    CHECK(family_forms(-2).second.matrix == Mat2{{{{-2, 0}, {-1, 0}}}});
    // second-framing override used by the negative controls
    CHECK(family_forms(3, 3).first.matrix == Mat2{{{{3, 1}, {0, 3}}}});
    CHECK(family_forms(3, 3).second.matrix == Mat2{{{{3, 0}, {-1, 3}}}});
}

TEST_CASE("pairing reproduces the squares of the main argument") {
    for (long long l : {1LL, 2LL, -3LL}) {
        const auto [vr, vrp] = family_forms(l);
        for (long long n : {1LL, 2LL, 3LL})
            for (long long m : {1LL, 2LL, 5LL}) {
                CHECK(pairing(vr, {n, m}, {n, m}) == n * n * l + n * m);
                CHECK(pairing(vrp, {n, m}, {n, m}) == n * n * l - n * m);
                const long long k = n;
                CHECK(pairing(vrp, {n, -m}, {k, 0}) == n * k * l + m * k);
            }
    }
}

TEST_CASE("pairing is bilinear in both slots") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> val(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const SeifertForm v{Mat2{{{{val(rng), val(rng)}, {val(rng), val(rng)}}}}, {"a", "b"}};
        const Vec2 a{val(rng), val(rng)}, a2{val(rng), val(rng)}, b{val(rng), val(rng)};
        CHECK(pairing(v, {a[0] + a2[0], a[1] + a2[1]}, b) ==
              pairing(v, a, b) + pairing(v, a2, b));
        CHECK(pairing(v, b, {a[0] + a2[0], a[1] + a2[1]}) ==
              pairing(v, b, a) + pairing(v, b, a2));
    }
}

TEST_CASE("alexander polynomial of the family is trivial") {
    for (long long l = -5; l <= 5; ++l) {
        const auto [vr, vrp] = family_forms(l);
        CHECK(alexander_from_seifert(vr) == LaurentPoly(1));
        CHECK(alexander_from_seifert(vrp) == LaurentPoly(1));
    }
}

TEST_CASE("alexander polynomials of reference matrices") {
    CHECK(alexander_from_seifert(IntMatrix::from_rows({{-1, 1}, {0, -1}})) ==
          poly({{1, 1}, {0, -1}, {-1, 1}}));
    CHECK(alexander_from_seifert(IntMatrix::from_rows({{1, 1}, {0, -1}})) ==
          poly({{1, -1}, {0, 3}, {-1, -1}}));
    // genus-2 chain matrix
    CHECK(alexander_from_seifert(IntMatrix::from_rows(
              {{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}})) ==
          poly({{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}}));
}

TEST_CASE("alexander polynomial is a congruence invariant") {
    std::mt19937_64 rng(17);
    const std::vector<Mat2> forms{Mat2{{{{-1, 1}, {0, -1}}}}, Mat2{{{{1, 1}, {0, -1}}}},
                                  Mat2{{{{2, 1}, {0, 0}}}}};
    for (const Mat2& v : forms) {
        const SeifertForm base{v, {"a", "b"}};
        for (int trial = 0; trial < 20; ++trial) {
            const Mat2 w = random_unimodular(rng);
            REQUIRE(std::abs(w.det()) == 1);
            const SeifertForm conj{w.transposed() * v * w, {"a", "b"}};
            CHECK(alexander_from_seifert(conj) == alexander_from_seifert(base));
        }
    }
}

TEST_CASE("congruence search finds the family witness") {
    const auto [vr, vrp] = family_forms(1);
    const auto witness = congruence_search(vr, vrp, 2);
    REQUIRE(witness.has_value());
    CHECK(witness->w.transposed() * vr.matrix * witness->w == vrp.matrix);
    CHECK(std::abs(witness->w.det()) == 1);
    // the stated witness verifies too
    const Mat2 w{{{{1, -1}, {0, 1}}}};
    CHECK(w.transposed() * vr.matrix * w == vrp.matrix);
}

TEST_CASE("congruence search: identity and impossibility") {
    const SeifertForm v{Mat2{{{{3, 1}, {-2, 5}}}}, {"a", "b"}};
    const auto self = congruence_search(v, v, 1);
    REQUIRE(self.has_value());
    CHECK(self->w.transposed() * v.matrix * self->w == v.matrix);
    // determinants 1 vs 2 differ, so no witness exists at any bound
    const SeifertForm id{Mat2{{{{1, 0}, {0, 1}}}}, {"a", "b"}};
    const SeifertForm twice{Mat2{{{{2, 0}, {0, 1}}}}, {"a", "b"}};
    CHECK_FALSE(congruence_search(id, twice, 3).has_value());
    CHECK_THROWS_AS(congruence_search(id, twice, 0), std::invalid_argument);
}

TEST_CASE("default bound grows with the framing") {
    CHECK(default_congruence_bound(0) == 5);
    CHECK(default_congruence_bound(1) == 5);
    CHECK(default_congruence_bound(-3) == 15);
    CHECK(default_congruence_bound(7) == 35);
}

TEST_SUITE_END();
