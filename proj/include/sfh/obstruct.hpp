#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfh/polytope.hpp"
#include "sfh/seifert.hpp"

namespace sfh {

// Everything the pipeline knows about one Seifert surface: the Seifert form
// and the support lattice of its complement, in a common labeled basis.
struct SurfaceInvariant {
    SeifertForm form;
    SupportLattice lattice;
    std::string surface_name;

    SurfaceInvariant change_basis(const Mat2& w, std::array<std::string, 2> new_labels) const;
};

enum class EquivStatus { Obstructed, Inconclusive };
const char* status_name(EquivStatus s);

struct CornerMatch {
    Vec2 from{0, 0};
    Vec2 to{0, 0};
    long long dim = 0;
};

struct EquivalenceWitness {
    Mat2 f;
    Vec2 translation{0, 0};
    std::vector<CornerMatch> corners;
};

struct Rejection {
    Mat2 f;
    std::string reason;
};

// Outcome of the finite search. OBSTRUCTED carries a rejection reason for
// every candidate; INCONCLUSIVE carries a witness that passed every
// necessary condition (the check never certifies equivalence).
struct EquivalenceReport {
    EquivStatus status = EquivStatus::Obstructed;
    long long candidates_checked = 0;
    std::optional<EquivalenceWitness> witness;
    std::vector<Rejection> log;
    std::string footnote;

    std::string to_string() const;
};

// All integer maps f with det +-1 carrying the difference set of a's
// support bijectively onto b's. Any graded isomorphism induces such a map,
// because all four corner groups are nonzero, so the affine support hull is
// the full rectangle. Empty when the extents are incompatible.
std::vector<Mat2> admissible_linear_maps(const SupportLattice& a, const SupportLattice& b);

// Finite search over admissible f: (i) f^T V_{R'} f = V_R exactly, and
// (ii) some affine placement over f matches every pair of known group
// dimensions, unknown interior points acting as wildcards. A surviving
// candidate yields INCONCLUSIVE with the witness; otherwise OBSTRUCTED with
// the full rejection log.
EquivalenceReport check_equivalence(const SurfaceInvariant& inv_r,
                                    const SurfaceInvariant& inv_r_prime);

// Re-runs the constraints recorded in a report against the invariants;
// true when the status, witness and rejection log all replay.
bool verify_report(const SurfaceInvariant& inv_r, const SurfaceInvariant& inv_r_prime,
                   const EquivalenceReport& report);

// Replay of the explicit inequality-chain certificate for the family with
// framings (l, 0), following the generator-by-generator argument: the
// extremal square forces the image of the long diagonal, the second square
// forces a pure first-axis step, and the two pairings then disagree.
struct PaperCertificate {
    long long l = 0;
    int n = 0, m = 0, k = 0;
    bool positive_branch = true;       // l > 0 uses (x11, xnm, xk1); l < 0 the mirrored triple
    long long target_square = 0;       // square of the forced diagonal class
    std::vector<Vec2> target_solutions;
    bool target_forced = false;        // solutions are exactly the +-(n, -+m) pair
    long long step_square = 0;         // k^2 l
    std::vector<Vec2> step_solutions;
    bool step_forces_axis = false;     // solutions are exactly (+-k, 0)
    long long pair_lhs = 0;            // pairing in the d-basis
    long long pair_rhs = 0;            // pairing in the c-basis
    bool contradiction = false;

    std::string to_string() const;  // stable field order
};

PaperCertificate paper_certificate(long long l, int n, int m, int k);

}  // namespace sfh
