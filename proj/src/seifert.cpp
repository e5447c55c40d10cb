#include "sfh/seifert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sfh {

Mat2 Mat2::operator*(const Mat2& rhs) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
    return r;
}

Vec2 Mat2::operator*(const Vec2& v) const {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

Mat2 Mat2::unimodular_inverse() const {
    const long long d = det();
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
    return Mat2{{{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}}};
}

std::string Mat2::to_string() const {
    std::ostringstream os;
    os << "[[" << m[0][0] << "," << m[0][1] << "],[" << m[1][0] << "," << m[1][1] << "]]";
    return os.str();
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix a;
    a.n = int(rows.size());
    a.v.reserve(size_t(a.n) * a.n);
    for (const auto& r : rows) {
        if (int(r.size()) != a.n) throw std::invalid_argument("matrix is not square");
        for (long long x : r) a.v.push_back(x);
    }
    return a;
}

std::pair<SeifertForm, SeifertForm> family_forms(long long l, long long l2) {
    SeifertForm vr{Mat2{{{{l, 1}, {0, l2}}}}, {"c1", "c2"}};
    SeifertForm vrp{Mat2{{{{l, 0}, {-1, l2}}}}, {"d1", "d2"}};
    return {vr, vrp};
}

std::pair<SeifertForm, SeifertForm> family_forms(long long l) { return family_forms(l, 0); }

long long pairing(const SeifertForm& form, const Vec2& a, const Vec2& b) {
    const Vec2 vb = form.matrix * b;
    return a[0] * vb[0] + a[1] * vb[1];
}

namespace {

// determinant of a matrix of Laurent polynomials by cofactor expansion;
// fine for the 2g x 2g matrices handled here
LaurentPoly poly_det(const std::vector<std::vector<LaurentPoly>>& a,
                     std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() == 1) return a[rows[0]][cols[0]];
    LaurentPoly acc;
    const int r0 = rows.front();
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t k = 0; k < cols.size(); ++k) {
        std::vector<int> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        LaurentPoly term = a[r0][cols[k]] * poly_det(a, sub_rows, sub_cols);
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

LaurentPoly alexander_from_seifert(const IntMatrix& v) {
    if (v.n <= 0) throw std::invalid_argument("empty Seifert matrix");
    std::vector<std::vector<LaurentPoly>> a(v.n, std::vector<LaurentPoly>(v.n));
    for (int i = 0; i < v.n; ++i)
        for (int j = 0; j < v.n; ++j)
            a[i][j] = LaurentPoly(v.at(i, j)) - LaurentPoly::monomial(v.at(j, i), 1);
    std::vector<int> idx(v.n);
    for (int i = 0; i < v.n; ++i) idx[i] = i;
    LaurentPoly d = poly_det(a, idx, idx);
    if (d.is_zero())
        throw std::runtime_error("det(V - tV^T) vanishes; matrix is not a knot Seifert matrix");
    return d.normalized_symmetric();
}

LaurentPoly alexander_from_seifert(const SeifertForm& form) {
    IntMatrix v;
    v.n = 2;
    v.v = {form.matrix.at(0, 0), form.matrix.at(0, 1), form.matrix.at(1, 0),
           form.matrix.at(1, 1)};
    return alexander_from_seifert(v);
}

std::optional<CongruenceWitness> congruence_search(const SeifertForm& v,
                                                   const SeifertForm& v_prime,
                                                   long long bound) {
    if (bound < 1) throw std::invalid_argument("congruence search bound must be >= 1");
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b)
            for (long long c = -bound; c <= bound; ++c)
                for (long long d = -bound; d <= bound; ++d) {
                    Mat2 w{{{{a, b}, {c, d}}}};
                    const long long det = w.det();
                    if (det != 1 && det != -1) continue;
                    if (w.transposed() * v.matrix * w == v_prime.matrix)
                        return CongruenceWitness{w};
                }
    return std::nullopt;
}

long long default_congruence_bound(long long l) {
    const long long abs_l = l < 0 ? -l : l;
    return std::max<long long>(5, 5 * abs_l);
}

}  // namespace sfh
