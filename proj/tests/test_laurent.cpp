#include "doctest.h"

#include "sfh/laurent.hpp"

using sfh::LaurentPoly;

namespace {

LaurentPoly from_pairs(std::initializer_list<std::pair<int, long long>> pairs) {
    LaurentPoly p;
    for (const auto& [e, c] : pairs) p.set_coeff(e, c);
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("laurent");

TEST_CASE("arithmetic basics") {
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    const LaurentPoly p = t + LaurentPoly(1);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 1);
    CHECK((p - p).is_zero());
    const LaurentPoly sq = p * p;
    CHECK(sq == from_pairs({{0, 1}, {1, 2}, {2, 1}}));
    CHECK((-p) == from_pairs({{0, -1}, {1, -1}}));
    CHECK(p.eval_at_one() == 2);
}

TEST_CASE("no zero coefficients survive") {
    LaurentPoly p = from_pairs({{0, 1}, {2, 3}});
    LaurentPoly q = from_pairs({{2, 3}});
    CHECK((p - q) == LaurentPoly(1));
    CHECK((p - q).coefficients().size() == 1);
    p.set_coeff(2, 0);
    CHECK(p == LaurentPoly(1));
}

TEST_CASE("exact division and remainder detection") {
    // (1 - t^-1)^2 divides (t - 2 + t^-1) * t^-1 exactly... build products instead
    const LaurentPoly f = from_pairs({{0, 1}, {-1, -1}});
    const LaurentPoly g = from_pairs({{1, 1}, {0, -1}, {-1, 1}});
    const LaurentPoly prod = f * g;
    CHECK(prod.divide_exact(f) == g);
    CHECK(prod.divide_exact(g) == f);
    const LaurentPoly off = prod + LaurentPoly(1);
    CHECK_THROWS_AS(off.divide_exact(f), std::runtime_error);
    CHECK_THROWS_AS(f.divide_exact(LaurentPoly()), std::runtime_error);
}

TEST_CASE("symmetric normalization") {
    // t^3 - t^2 + t^1 normalizes to t - 1 + t^-1
    const LaurentPoly shifted = from_pairs({{3, 1}, {2, -1}, {1, 1}});
    CHECK(shifted.normalized_symmetric() == from_pairs({{1, 1}, {0, -1}, {-1, 1}}));
    // sign fixed by positive value at t = 1
    const LaurentPoly neg = from_pairs({{1, 1}, {0, -3}, {-1, 1}});
    CHECK(neg.normalized_symmetric() == from_pairs({{1, -1}, {0, 3}, {-1, -1}}));
    // asymmetric input is a hard failure
    CHECK_THROWS_AS(from_pairs({{1, 1}, {0, 2}}).normalized_symmetric(), std::runtime_error);
    CHECK_THROWS_AS(from_pairs({{1, 1}, {0, 1}, {-2, 1}}).normalized_symmetric(),
                    std::runtime_error);
}

TEST_CASE("equality up to units") {
    const LaurentPoly p = from_pairs({{1, 1}, {0, -1}, {-1, 1}});
    const LaurentPoly shifted = p * LaurentPoly::monomial(1, 5);
    const LaurentPoly negated = -shifted;
    CHECK(LaurentPoly::equal_up_to_units(p, shifted));
    CHECK(LaurentPoly::equal_up_to_units(p, negated));
    CHECK_FALSE(LaurentPoly::equal_up_to_units(p, p * LaurentPoly(2)));
    CHECK(LaurentPoly::equal_up_to_units(LaurentPoly(), LaurentPoly()));
    CHECK_FALSE(LaurentPoly::equal_up_to_units(LaurentPoly(), p));
}

TEST_CASE("printing") {
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(from_pairs({{1, 1}, {0, -1}, {-1, 1}}).to_string() == "t - 1 + t^-1");
    CHECK(from_pairs({{2, -3}, {0, 1}}).to_string() == "-3*t^2 + 1");
}

TEST_SUITE_END();
