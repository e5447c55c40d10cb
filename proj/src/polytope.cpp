#include "sfh/polytope.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sfh {

AnnulusFactor annulus_factor(const HfkTop& top, long long framing,
                             const std::string& knot_name) {
    if (top.genus < 1)
        throw std::invalid_argument("family requires nontrivial knots (genus 0 input: " +
                                    knot_name + ")");
    if (top.top_rank <= 0) throw std::invalid_argument("top group must be nonzero");
    AnnulusFactor f;
    f.knot_name = knot_name;
    f.framing = framing;
    f.genus = top.genus;
    f.length = 2 * top.genus;
    BigradedGroup end;
    for (const auto& [maslov, d] : top.top_maslov_dims) end.add({maslov, top.genus}, d);
    if (framing == 0) end = BigradedGroup::direct_sum(end, end);
    f.end_group_high = end;
    f.end_group_low = end;  // opposite-orientation decomposition gives the same group
    f.interior_known = f.length == 2;
    if (f.interior_known) f.interior_groups.emplace();  // no interior points
    return f;
}

const char* corner_name(Corner c) {
    switch (c) {
        case Corner::LowLow: return "low_low";
        case Corner::HighLow: return "high_low";
        case Corner::LowHigh: return "low_high";
        case Corner::HighHigh: return "high_high";
    }
    return "?";
}

namespace {

Vec2 native_corner(Corner c, int n, int m) {
    switch (c) {
        case Corner::LowLow: return {0, 0};
        case Corner::HighLow: return {n - 1, 0};
        case Corner::LowHigh: return {0, m - 1};
        case Corner::HighHigh: return {n - 1, m - 1};
    }
    return {0, 0};
}

}  // namespace

Vec2 SupportLattice::corner_point(Corner c) const {
    return transform * native_corner(c, extent_n, extent_m);
}

std::vector<Vec2> SupportLattice::points() const {
    std::vector<Vec2> out;
    out.reserve(size_t(extent_n) * extent_m);
    for (int i = 0; i < extent_n; ++i)
        for (int j = 0; j < extent_m; ++j) out.push_back(transform * Vec2{i, j});
    return out;
}

std::vector<Vec2> SupportLattice::difference_set() const {
    std::vector<Vec2> out;
    out.reserve(size_t(2 * extent_n - 1) * (2 * extent_m - 1));
    for (int i = -(extent_n - 1); i <= extent_n - 1; ++i)
        for (int j = -(extent_m - 1); j <= extent_m - 1; ++j)
            out.push_back(transform * Vec2{i, j});
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<long long> SupportLattice::known_dim(const Vec2& p) const {
    const Vec2 q = transform.unimodular_inverse() * p;  // native coordinates
    if (q[0] < 0 || q[0] >= extent_n || q[1] < 0 || q[1] >= extent_m) return 0;
    for (Corner c : kCorners)
        if (native_corner(c, extent_n, extent_m) == q) return corner(c).total_dim();
    if (interior_known) return 0;  // fully known lattice: nothing off the corners
    return std::nullopt;
}

SupportLattice SupportLattice::change_basis(const Mat2& w,
                                            std::array<std::string, 2> new_labels) const {
    const long long d = w.det();
    if (d != 1 && d != -1) throw std::invalid_argument("change of basis must be unimodular");
    SupportLattice out = *this;
    // coordinates transform by the inverse of the basis matrix
    out.transform = w.unimodular_inverse() * transform;
    out.spacing_labels = std::move(new_labels);
    return out;
}

SupportLattice murasugi_tensor(const AnnulusFactor& f1, const AnnulusFactor& f2,
                               std::array<std::string, 2> spacing_labels) {
    if (f1.length < 2 || f2.length < 2)
        throw std::invalid_argument("annulus factors must have length >= 2");
    SupportLattice lat;
    lat.extent_n = f1.length;
    lat.extent_m = f2.length;
    lat.spacing_labels = std::move(spacing_labels);
    lat.corner_groups[size_t(Corner::LowLow)] =
        BigradedGroup::tensor(f1.end_group_low, f2.end_group_low);
    lat.corner_groups[size_t(Corner::HighLow)] =
        BigradedGroup::tensor(f1.end_group_high, f2.end_group_low);
    lat.corner_groups[size_t(Corner::LowHigh)] =
        BigradedGroup::tensor(f1.end_group_low, f2.end_group_high);
    lat.corner_groups[size_t(Corner::HighHigh)] =
        BigradedGroup::tensor(f1.end_group_high, f2.end_group_high);
    for (Corner c : kCorners)
        if (lat.corner(c).is_zero())
            throw std::runtime_error("corner group vanished; factors must be nonzero");
    lat.interior_known = f1.interior_known && f2.interior_known;
    return lat;
}

std::string SupportLattice::to_string() const {
    std::ostringstream os;
    os << extent_n << "x" << extent_m << " lattice, spacing (" << spacing_labels[0] << ","
       << spacing_labels[1] << "), interior "
       << (interior_known ? "known" : "unknown");
    for (Corner c : kCorners)
        os << "\n  " << corner_name(c) << ": dim " << corner(c).total_dim() << " ["
           << corner(c).to_string() << "]";
    return os.str();
}

BreadthCheck breadth_check(const AnnulusFactor& f) {
    BreadthCheck b;
    b.z = f.length - 1;
    b.x_s = 2 * f.genus - 1;
    b.ok = b.z == b.x_s;
    return b;
}

}  // namespace sfh
