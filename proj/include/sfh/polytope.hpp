#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sfh/bigraded.hpp"
#include "sfh/grid.hpp"
#include "sfh/seifert.hpp"

namespace sfh {

// Support line of the sutured homology of a knotted-annulus complement:
// length = 2*genus lattice points with computed end groups. The interior
// groups are not computed by the pipeline and stay unknown unless the line
// has no interior.
struct AnnulusFactor {
    std::string knot_name;
    long long framing = 0;
    int genus = 0;
    int length = 0;  // = 2 * genus
    BigradedGroup end_group_low;
    BigradedGroup end_group_high;
    bool interior_known = false;
    std::optional<std::vector<BigradedGroup>> interior_groups;
};

// End groups come from decomposing along the Seifert surface in both
// orientations: the top HFK group, doubled when the framing is zero.
// Rejects genus 0 (the family requires nontrivial knots).
AnnulusFactor annulus_factor(const HfkTop& top, long long framing,
                             const std::string& knot_name);

enum class Corner { LowLow, HighLow, LowHigh, HighHigh };
constexpr std::array<Corner, 4> kCorners{Corner::LowLow, Corner::HighLow, Corner::LowHigh,
                                         Corner::HighHigh};
const char* corner_name(Corner c);

// Rectangular support lattice of a plumbed-surface complement. Points live
// in the labeled H_1 basis; `transform` maps native rectangle coordinates
// {0..n-1} x {0..m-1} into that basis (identity unless a change of basis
// has been applied). Differences of points model the difference classes of
// relative Spin^c structures.
struct SupportLattice {
    int extent_n = 0;  // first-factor direction
    int extent_m = 0;
    std::array<BigradedGroup, 4> corner_groups;  // indexed by Corner
    bool interior_known = false;
    std::array<std::string, 2> spacing_labels{"", ""};
    Mat2 transform = Mat2::identity();

    const BigradedGroup& corner(Corner c) const { return corner_groups[size_t(c)]; }
    Vec2 corner_point(Corner c) const;  // in label coordinates
    std::vector<Vec2> points() const;   // all lattice points, label coordinates
    std::vector<Vec2> difference_set() const;

    // Total dimension at a lattice point when it is determined: corner
    // values, zero outside the rectangle, everything known for a lattice
    // with no interior. Unknown interior points return nullopt.
    std::optional<long long> known_dim(const Vec2& p) const;

    // Same lattice expressed in the basis with change-of-basis matrix w
    // (new basis vectors are the columns of w in the old basis).
    SupportLattice change_basis(const Mat2& w, std::array<std::string, 2> new_labels) const;

    std::string to_string() const;
};

// Tensor-product lattice of two annulus factors: extents are the factor
// lengths, corner groups multiply, interior known only when both factors
// have none.
SupportLattice murasugi_tensor(const AnnulusFactor& f1, const AnnulusFactor& f2,
                               std::array<std::string, 2> spacing_labels = {"c1", "c2"});

struct BreadthCheck {
    long long z = 0;    // lattice breadth at unit spacing
    long long x_s = 0;  // sutured norm of the annulus class, 2g - 1
    bool ok = false;
};

BreadthCheck breadth_check(const AnnulusFactor& f);

// Sutured norm of a generator for a knot complement with two meridional
// sutures; differs from the annulus value. Kept for reference.
constexpr long long meridional_sutured_norm(long long genus) { return 2 * genus; }

}  // namespace sfh
