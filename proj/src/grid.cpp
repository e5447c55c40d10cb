#include "sfh/grid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sfh {

namespace {

constexpr int kMaxPackedSize = 16;   // 4-bit rows
constexpr int kMaxEnumeratedSize = 10;  // n! states

bool is_permutation_of_range(const std::vector<int>& v, int n) {
    if (int(v.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int a : v) {
        if (a < 0 || a >= n || seen[a]) return false;
        seen[a] = true;
    }
    return true;
}

int knot_components(const GridDiagram& g) {
    const int n = g.size;
    std::vector<int> x_col_of_row(n), seen(n, 0);
    for (int c = 0; c < n; ++c) x_col_of_row[g.x[c]] = c;
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        ++components;
        int c = start;
        while (!seen[c]) {
            seen[c] = 1;
            // vertical X(c) -> O(c), then horizontal to the X in O's row
            c = x_col_of_row[g.o[c]];
        }
    }
    return components;
}

}  // namespace

void validate_diagram(const GridDiagram& g) {
    if (g.size <= 0) throw std::invalid_argument("grid size must be positive");
    if (g.size > kMaxPackedSize)
        throw std::invalid_argument("grid size exceeds supported maximum of 16");
    if (!is_permutation_of_range(g.x, g.size))
        throw std::invalid_argument("x is not a permutation of 0.." + std::to_string(g.size - 1));
    if (!is_permutation_of_range(g.o, g.size))
        throw std::invalid_argument("o is not a permutation of 0.." + std::to_string(g.size - 1));
    for (int c = 0; c < g.size; ++c)
        if (g.x[c] == g.o[c])
            throw std::invalid_argument("column " + std::to_string(c) +
                                        " holds both X and O in the same cell");
    const int comps = knot_components(g);
    if (comps != 1)
        throw std::invalid_argument("diagram presents a link with " + std::to_string(comps) +
                                    " components; expected a single knot");
}

bool is_valid_diagram(const GridDiagram& g, std::string* why) {
    try {
        validate_diagram(g);
        return true;
    } catch (const std::invalid_argument& e) {
        if (why) *why = e.what();
        return false;
    }
}

GridDiagram make_diagram(int size, std::vector<int> x, std::vector<int> o) {
    GridDiagram g{size, std::move(x), std::move(o)};
    validate_diagram(g);
    return g;
}

std::vector<int> GridState::to_perm() const {
    std::vector<int> p(size);
    for (int i = 0; i < size; ++i) p[i] = row(i);
    return p;
}

GridState GridState::from_perm(const std::vector<int>& perm) {
    if (perm.size() > kMaxPackedSize) throw std::invalid_argument("state too large to pack");
    GridState s;
    s.size = int(perm.size());
    for (int i = 0; i < s.size; ++i) s.bits |= std::uint64_t(perm[i] & 0xF) << (4 * i);
    return s;
}

std::vector<GridState> enumerate_states(const GridDiagram& g) {
    if (g.size <= 0) throw std::invalid_argument("grid size must be positive");
    if (g.size > kMaxEnumeratedSize)
        throw std::invalid_argument("state enumeration supported for size <= " +
                                    std::to_string(kMaxEnumeratedSize));
    std::vector<int> perm(g.size);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<GridState> out;
    do {
        out.push_back(GridState::from_perm(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

// 2*J(A,B) where J counts strict southwest pairs in both orders, halved.
// Points carry doubled coordinates so markers sit at odd positions.
int two_j(const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b) {
    int t = 0;
    for (const auto& p : a)
        for (const auto& q : b) {
            if (p.first < q.first && p.second < q.second) ++t;
            if (q.first < p.first && q.second < p.second) ++t;
        }
    return t;
}

std::vector<std::pair<int, int>> state_points(const GridState& s) {
    std::vector<std::pair<int, int>> pts(s.size);
    for (int i = 0; i < s.size; ++i) pts[i] = {2 * i, 2 * s.row(i)};
    return pts;
}

std::vector<std::pair<int, int>> marker_points(const std::vector<int>& m) {
    std::vector<std::pair<int, int>> pts(m.size());
    for (size_t i = 0; i < m.size(); ++i) pts[i] = {2 * int(i) + 1, 2 * m[i] + 1};
    return pts;
}

int maslov_against(const std::vector<std::pair<int, int>>& sp,
                   const std::vector<std::pair<int, int>>& mp) {
    const int num = two_j(sp, sp) - 2 * two_j(sp, mp) + two_j(mp, mp) + 2;
    // mixed J terms contribute in halves but the combination is integral
    return num / 2;
}

}  // namespace

Bigrading state_bigrading(const GridDiagram& g, const GridState& s) {
    if (s.size != g.size) throw std::invalid_argument("state size does not match grid");
    const auto sp = state_points(s);
    const int m_o = maslov_against(sp, marker_points(g.o));
    const int m_x = maslov_against(sp, marker_points(g.x));
    const int num = m_o - m_x - (g.size - 1);
    if (num % 2 != 0)
        throw std::invalid_argument(
            "half-integer Alexander grading: the diagram does not present a knot");
    return {m_o, num / 2};
}

namespace {

// Rectangle with cells in columns col0..col0+w-1 and rows row0..row0+h-1
// (cyclically). Empty means: no marker in any covered cell and no component
// of s strictly between the two vertical edges and the two horizontal ones.
bool rect_empty(const GridDiagram& g, const GridState& s, int col0, int w, int row0, int h) {
    const int n = g.size;
    for (int dc = 0; dc < w; ++dc) {
        const int c = (col0 + dc) % n;
        if ((g.x[c] - row0 + n) % n < h) return false;
        if ((g.o[c] - row0 + n) % n < h) return false;
    }
    for (int dc = 1; dc < w; ++dc) {
        const int c = (col0 + dc) % n;
        const int dr = (s.row(c) - row0 + n) % n;
        if (dr > 0 && dr < h) return false;
    }
    return true;
}

}  // namespace

std::vector<GridState> boundary_targets(const GridDiagram& g, const GridState& s) {
    const int n = g.size;
    std::vector<GridState> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int a = s.row(i);
            const int b = s.row(j);
            int count = 0;
            if (a < b) {
                if (rect_empty(g, s, i, j - i, a, b - a)) ++count;
                if (rect_empty(g, s, j, n - (j - i), b, n - (b - a))) ++count;
            } else {
                if (rect_empty(g, s, i, j - i, a, n - (a - b))) ++count;
                if (rect_empty(g, s, j, n - (j - i), b, a - b)) ++count;
            }
            if (count % 2 == 1) {
                GridState y = s;
                y.bits &= ~((std::uint64_t(0xF) << (4 * i)) | (std::uint64_t(0xF) << (4 * j)));
                y.bits |= std::uint64_t(b) << (4 * i);
                y.bits |= std::uint64_t(a) << (4 * j);
                out.push_back(y);
            }
        }
    }
    return out;
}

TildeComplex tilde_differential(const GridDiagram& g) {
    validate_diagram(g);
    TildeComplex c;
    for (const GridState& s : enumerate_states(g))
        c.buckets[state_bigrading(g, s)].push_back(s);
    for (const auto& [bg, states] : c.buckets) {
        auto& rows = c.boundary[bg];
        rows.resize(states.size());
        const Bigrading below{bg.maslov - 1, bg.alexander};
        for (size_t i = 0; i < states.size(); ++i) {
            for (const GridState& y : boundary_targets(g, states[i])) {
                const Bigrading ybg = state_bigrading(g, y);
                if (ybg != below)
                    throw std::runtime_error("boundary is not homogeneous of degree (-1,0)");
                rows[i].push_back(y.bits);
            }
        }
    }
    return c;
}

namespace {

// Rank over GF(2); rows are bitmask vectors of equal word length.
int gf2_rank(std::vector<std::vector<std::uint64_t>> rows) {
    int rank = 0;
    std::vector<std::vector<std::uint64_t>> basis;  // kept with distinct leading bits
    std::vector<int> lead;
    auto leading_bit = [](const std::vector<std::uint64_t>& r) {
        for (int w = int(r.size()) - 1; w >= 0; --w)
            if (r[w]) return w * 64 + 63 - std::countl_zero(r[w]);
        return -1;
    };
    for (auto& r : rows) {
        int lb = leading_bit(r);
        while (lb >= 0) {
            bool reduced = false;
            for (size_t k = 0; k < basis.size(); ++k) {
                if (lead[k] == lb) {
                    for (size_t w = 0; w < r.size(); ++w) r[w] ^= basis[k][w];
                    lb = leading_bit(r);
                    reduced = true;
                    break;
                }
            }
            if (!reduced) break;
        }
        if (lb >= 0) {
            basis.push_back(r);
            lead.push_back(lb);
            ++rank;
        }
    }
    return rank;
}

}  // namespace

BigradedGroup homology(const TildeComplex& c) {
    std::map<Bigrading, int> rank_out;  // rank of boundary leaving each bucket
    for (const auto& [bg, states] : c.buckets) {
        const Bigrading below{bg.maslov - 1, bg.alexander};
        auto tgt_it = c.buckets.find(below);
        if (tgt_it == c.buckets.end()) {
            rank_out[bg] = 0;
            continue;
        }
        std::unordered_map<std::uint64_t, int> col;
        col.reserve(tgt_it->second.size() * 2);
        for (size_t k = 0; k < tgt_it->second.size(); ++k) col[tgt_it->second[k].bits] = int(k);
        const size_t words = (tgt_it->second.size() + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows;
        rows.reserve(states.size());
        const auto& bnd = c.boundary.at(bg);
        for (size_t i = 0; i < states.size(); ++i) {
            std::vector<std::uint64_t> row(words, 0);
            for (std::uint64_t ybits : bnd[i]) {
                const int k = col.at(ybits);
                row[k / 64] ^= std::uint64_t(1) << (k % 64);
            }
            rows.push_back(std::move(row));
        }
        rank_out[bg] = gf2_rank(std::move(rows));
    }
    BigradedGroup h;
    for (const auto& [bg, states] : c.buckets) {
        const Bigrading above{bg.maslov + 1, bg.alexander};
        long long d = (long long)states.size() - rank_out[bg];
        auto it = rank_out.find(above);
        if (it != rank_out.end()) d -= it->second;
        if (d < 0) throw std::runtime_error("negative homology dimension: rank bookkeeping bug");
        h.add(bg, d);
    }
    return h;
}

BigradedGroup homology(const GridDiagram& g) { return homology(tilde_differential(g)); }

HfkTop hfk_top(const BigradedGroup& hom) {
    if (hom.is_zero()) throw std::invalid_argument("homology is zero; not a knot invariant");
    HfkTop t;
    t.genus = hom.max_alexander();
    t.top_maslov_dims = hom.alexander_slice(t.genus);
    for (const auto& [m, d] : t.top_maslov_dims) t.top_rank += d;
    return t;
}

HfkTop hfk_top(const GridDiagram& g) { return hfk_top(homology(g)); }

LaurentPoly alexander_from_euler(const GridDiagram& g, const BigradedGroup& hom) {
    LaurentPoly chi = hom.euler_poly();
    const LaurentPoly factor = LaurentPoly(1) - LaurentPoly::monomial(1, -1);
    LaurentPoly div = LaurentPoly::one();
    for (int i = 0; i < g.size - 1; ++i) div = div * factor;
    LaurentPoly q;
    try {
        q = chi.divide_exact(div);
    } catch (const std::runtime_error&) {
        throw std::runtime_error(
            "Euler characteristic not divisible by (1 - t^-1)^(n-1): grading convention bug");
    }
    return q.normalized_symmetric();
}

LaurentPoly alexander_from_euler(const GridDiagram& g) {
    return alexander_from_euler(g, homology(g));
}

GridDiagram mirror(const GridDiagram& g) {
    GridDiagram m;
    m.size = g.size;
    m.x.assign(g.x.rbegin(), g.x.rend());
    m.o.assign(g.o.rbegin(), g.o.rend());
    return m;
}

GridDiagram stabilize(const GridDiagram& g, int column) {
    validate_diagram(g);
    if (column < 0 || column >= g.size) throw std::invalid_argument("stabilization column out of range");
    const int n = g.size;
    const int r = g.x[column];
    auto row_up = [r](int s) { return s < r ? s : s + 1; };
    GridDiagram out;
    out.size = n + 1;
    out.x.assign(n + 1, 0);
    out.o.assign(n + 1, 0);
    for (int k = 0; k < n; ++k) {
        const int nk = k <= column ? k : k + 1;
        if (k != column) out.x[nk] = row_up(g.x[k]);
        out.o[nk] = row_up(g.o[k]);
    }
    // split the chosen X into an L-shaped X/O/X block occupying the new
    // column and the new row
    out.x[column] = r;
    out.x[column + 1] = r + 1;
    out.o[column + 1] = r;
    validate_diagram(out);
    return out;
}

GridDiagram random_knot_diagram(int size, std::mt19937_64& rng) {
    if (size < 2) throw std::invalid_argument("random diagram needs size >= 2");
    GridDiagram g;
    g.size = size;
    g.x.resize(size);
    g.o.resize(size);
    std::iota(g.x.begin(), g.x.end(), 0);
    std::iota(g.o.begin(), g.o.end(), 0);
    while (true) {
        std::shuffle(g.x.begin(), g.x.end(), rng);
        std::shuffle(g.o.begin(), g.o.end(), rng);
        bool disjoint = true;
        for (int c = 0; c < size && disjoint; ++c) disjoint = g.x[c] != g.o[c];
        if (disjoint && knot_components(g) == 1) return g;
    }
}

}  // namespace sfh
