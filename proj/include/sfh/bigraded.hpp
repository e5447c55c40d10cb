#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "sfh/laurent.hpp"

namespace sfh {

struct Bigrading {
    int maslov = 0;
    int alexander = 0;
    auto operator<=>(const Bigrading&) const = default;
};

// Dimensions of a finite-dimensional bigraded vector space over GF(2).
// Only nonzero dimensions are stored.
class BigradedGroup {
public:
    BigradedGroup() = default;

    long long dim(Bigrading bg) const;
    void add(Bigrading bg, long long d);  // d >= 0; accumulates
    long long total_dim() const;
    bool is_zero() const { return dims_.empty(); }

    // Largest Alexander grading carrying a nonzero dimension; throws on zero group.
    int max_alexander() const;
    // Maslov -> dimension at the given Alexander grading.
    std::map<int, long long> alexander_slice(int alexander) const;

    // Graded Euler characteristic: sum over (M,A) of (-1)^M dim t^A.
    LaurentPoly euler_poly() const;

    static BigradedGroup tensor(const BigradedGroup& a, const BigradedGroup& b);
    static BigradedGroup direct_sum(const BigradedGroup& a, const BigradedGroup& b);

    bool operator==(const BigradedGroup&) const = default;
    const std::map<Bigrading, long long>& dims() const { return dims_; }

    std::string to_string() const;  // "(M,A):dim" entries, A descending

private:
    std::map<Bigrading, long long> dims_;
};

}  // namespace sfh
