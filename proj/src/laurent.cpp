#include "sfh/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace sfh {

LaurentPoly::LaurentPoly(long long constant) {
    if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(long long coeff, int exponent) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exponent] = coeff;
    return p;
}

long long LaurentPoly::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

void LaurentPoly::set_coeff(int exponent, long long value) {
    if (value == 0)
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = value;
}

void LaurentPoly::trim(int exponent) {
    auto it = coeffs_.find(exponent);
    if (it != coeffs_.end() && it->second == 0) coeffs_.erase(it);
}

int LaurentPoly::min_exponent() const {
    if (coeffs_.empty()) throw std::runtime_error("min_exponent of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (coeffs_.empty()) throw std::runtime_error("max_exponent of zero polynomial");
    return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : rhs.coeffs_) {
        r.coeffs_[e] += c;
        r.trim(e);
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : rhs.coeffs_) {
        r.coeffs_[e] -= c;
        r.trim(e);
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : rhs.coeffs_) {
            r.coeffs_[e1 + e2] += c1 * c2;
            r.trim(e1 + e2);
        }
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::runtime_error("division by zero polynomial");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dlead = divisor.max_exponent();
    const long long dc = divisor.coeffs_.at(dlead);
    while (!rem.is_zero()) {
        const int rlead = rem.max_exponent();
        const long long rc = rem.coeffs_.at(rlead);
        if (rc % dc != 0)
            throw std::runtime_error("non-exact Laurent division (leading coefficient)");
        const long long q = rc / dc;
        const int e = rlead - dlead;
        quot.coeffs_[e] = q;
        rem = rem - divisor * monomial(q, e);
        if (!rem.is_zero() && rem.max_exponent() >= rlead)
            throw std::runtime_error("non-exact Laurent division");
    }
    return quot;
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

long long LaurentPoly::eval_at_one() const {
    long long s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

LaurentPoly LaurentPoly::normalized_symmetric() const {
    if (is_zero()) return *this;
    const int lo = min_exponent();
    const int hi = max_exponent();
    if ((lo + hi) % 2 != 0)
        throw std::runtime_error("polynomial has no symmetric unit multiple (odd span)");
    const int shift = -(lo + hi) / 2;
    LaurentPoly p;
    for (const auto& [e, c] : coeffs_) p.coeffs_[e + shift] = c;
    if (p != p.reversed())
        throw std::runtime_error("polynomial has no symmetric unit multiple");
    const long long at_one = p.eval_at_one();
    const bool negate = at_one < 0 || (at_one == 0 && p.coeffs_.rbegin()->second < 0);
    return negate ? -p : p;
}

bool LaurentPoly::equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    const int shift = q.max_exponent() - p.max_exponent();
    LaurentPoly ps = p * monomial(1, shift);
    return ps == q || -ps == q;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest exponent first
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto [e, c] = *it;
        long long a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace sfh
