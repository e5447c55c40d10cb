#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sfh/laurent.hpp"

namespace sfh {

using Vec2 = std::array<long long, 2>;

// 2x2 integer matrix, row-major.
struct Mat2 {
    std::array<std::array<long long, 2>, 2> m{{{0, 0}, {0, 0}}};

    static Mat2 identity() { return Mat2{{{{1, 0}, {0, 1}}}}; }

    long long at(int i, int j) const { return m[i][j]; }
    long long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    Mat2 transposed() const { return Mat2{{{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}}}; }
    Mat2 operator*(const Mat2& rhs) const;
    Vec2 operator*(const Vec2& v) const;
    bool operator==(const Mat2&) const = default;
    auto operator<=>(const Mat2&) const = default;

    // Inverse of a matrix with det +-1.
    Mat2 unimodular_inverse() const;

    std::string to_string() const;  // [[a,b],[c,d]]
};

// General small square integer matrix (reference Seifert matrices are 2g x 2g).
struct IntMatrix {
    int n = 0;
    std::vector<long long> v;  // row-major

    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
    long long at(int i, int j) const { return v[size_t(i) * n + j]; }
    long long& at(int i, int j) { return v[size_t(i) * n + j]; }
    bool operator==(const IntMatrix&) const = default;
};

// Integer Seifert pairing on H_1 of a surface complement, in a labeled basis.
struct SeifertForm {
    Mat2 matrix;
    std::array<std::string, 2> basis_labels{"", ""};
};

struct CongruenceWitness {
    Mat2 w;  // det +-1, W^T V W = V'
};

// Seifert forms of the two plumbed surfaces with framings (l, l2):
//   V_R  = [[l, 1], [0, l2]]  in basis (c1, c2)
//   V_R' = [[l, 0], [-1, l2]] in basis (d1, d2)
// The two-argument overload serves negative controls; the family proper has
// second framing 0.
std::pair<SeifertForm, SeifertForm> family_forms(long long l, long long l2);
std::pair<SeifertForm, SeifertForm> family_forms(long long l);

// a^T V b; pairing(V, a, a) is the square of a class.
long long pairing(const SeifertForm& form, const Vec2& a, const Vec2& b);

// det(V - t V^T), normalized symmetric with positive value at t = 1.
LaurentPoly alexander_from_seifert(const IntMatrix& v);
LaurentPoly alexander_from_seifert(const SeifertForm& form);

// Exhaustive search for W with entries in [-bound, bound], det W = +-1 and
// W^T V W = V'. Returns the first hit in a fixed scan order, or nothing.
std::optional<CongruenceWitness> congruence_search(const SeifertForm& v,
                                                   const SeifertForm& v_prime,
                                                   long long bound);

// Default search bound for the family at framing l.
long long default_congruence_bound(long long l);

}  // namespace sfh
