#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace sfh {

// Laurent polynomial in one variable t with exact integer coefficients.
// Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long long constant);
    static LaurentPoly monomial(long long coeff, int exponent);
    static LaurentPoly one() { return LaurentPoly(1); }

    bool is_zero() const { return coeffs_.empty(); }
    long long coeff(int exponent) const;
    void set_coeff(int exponent, long long value);
    int min_exponent() const;  // throws on zero polynomial
    int max_exponent() const;

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& rhs) const = default;

    // Exact division; throws std::runtime_error if the remainder is nonzero.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    // t -> t^{-1}
    LaurentPoly reversed() const;

    long long eval_at_one() const;

    // Multiplies by +-t^k so that p(t) = p(t^{-1}) and p(1) > 0 (leading
    // coefficient positive when p(1) = 0). Throws if no unit multiple of
    // the polynomial is symmetric.
    LaurentPoly normalized_symmetric() const;

    // True if p and q agree up to multiplication by +-t^k.
    static bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q);

    const std::map<int, long long>& coefficients() const { return coeffs_; }

    std::string to_string() const;  // e.g. "t - 1 + t^-1"

private:
    std::map<int, long long> coeffs_;
    void trim(int exponent);
};

}  // namespace sfh
