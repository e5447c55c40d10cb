#include "sfh/obstruct.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sfh {

SurfaceInvariant SurfaceInvariant::change_basis(const Mat2& w,
                                                std::array<std::string, 2> new_labels) const {
    SurfaceInvariant out;
    out.surface_name = surface_name;
    out.form.matrix = w.transposed() * form.matrix * w;
    out.form.basis_labels = new_labels;
    out.lattice = lattice.change_basis(w, new_labels);
    return out;
}

const char* status_name(EquivStatus s) {
    return s == EquivStatus::Obstructed ? "OBSTRUCTED" : "INCONCLUSIVE";
}

namespace {

constexpr const char* kEntryBoundNote =
    "candidate bound: an admissible f maps the difference vectors of one support "
    "rectangle onto the other's, so each column of f is a difference vector and "
    "every entry is bounded by max(extent_n, extent_m) - 1; the enumeration over "
    "pairs of difference vectors is therefore exhaustive";

}  // namespace

std::vector<Mat2> admissible_linear_maps(const SupportLattice& a, const SupportLattice& b) {
    const std::vector<Vec2> da = a.difference_set();
    const std::vector<Vec2> db = b.difference_set();
    std::set<Mat2> out;
    if (da.size() != db.size()) return {};
    const std::set<Vec2> db_set(db.begin(), db.end());

    // f is determined by the images of two independent difference vectors
    Vec2 u{0, 0}, v{0, 0};
    long long det_uv = 0;
    for (const Vec2& p : da) {
        for (const Vec2& q : da) {
            det_uv = p[0] * q[1] - p[1] * q[0];
            if (det_uv != 0) {
                u = p;
                v = q;
                break;
            }
        }
        if (det_uv != 0) break;
    }
    if (det_uv == 0) return {};

    for (const Vec2& bu : db) {
        for (const Vec2& bv : db) {
            // f * (u|v) = (bu|bv)
            const long long a11 = bu[0] * v[1] - bv[0] * u[1];
            const long long a12 = -bu[0] * v[0] + bv[0] * u[0];
            const long long a21 = bu[1] * v[1] - bv[1] * u[1];
            const long long a22 = -bu[1] * v[0] + bv[1] * u[0];
            if (a11 % det_uv || a12 % det_uv || a21 % det_uv || a22 % det_uv) continue;
            const Mat2 f{{{{a11 / det_uv, a12 / det_uv}, {a21 / det_uv, a22 / det_uv}}}};
            const long long d = f.det();
            if (d != 1 && d != -1) continue;
            bool onto = true;
            for (const Vec2& p : da) {
                if (!db_set.count(f * p)) {
                    onto = false;
                    break;
                }
            }
            if (onto) out.insert(f);  // |image| = |da| = |db| forces bijectivity
        }
    }
    return {out.begin(), out.end()};
}

namespace {

// The unique translation making f(points_a) equal points_b, if any: a
// translate between finite sets is forced to be the centroid difference.
std::optional<Vec2> placement_translation(const std::vector<Vec2>& pts_a,
                                          const std::vector<Vec2>& pts_b, const Mat2& f) {
    if (pts_a.size() != pts_b.size() || pts_a.empty()) return std::nullopt;
    Vec2 sum_fa{0, 0}, sum_b{0, 0};
    for (const Vec2& p : pts_a) {
        const Vec2 q = f * p;
        sum_fa[0] += q[0];
        sum_fa[1] += q[1];
    }
    for (const Vec2& q : pts_b) {
        sum_b[0] += q[0];
        sum_b[1] += q[1];
    }
    const long long count = (long long)pts_a.size();
    const Vec2 diff{sum_b[0] - sum_fa[0], sum_b[1] - sum_fa[1]};
    if (diff[0] % count != 0 || diff[1] % count != 0) return std::nullopt;
    const Vec2 t{diff[0] / count, diff[1] / count};
    std::set<Vec2> target(pts_b.begin(), pts_b.end());
    for (const Vec2& p : pts_a) {
        const Vec2 q = f * p;
        if (!target.count({q[0] + t[0], q[1] + t[1]})) return std::nullopt;
    }
    return t;
}

std::string vec_str(const Vec2& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")";
}

}  // namespace

EquivalenceReport check_equivalence(const SurfaceInvariant& inv_r,
                                    const SurfaceInvariant& inv_r_prime) {
    EquivalenceReport report;
    report.footnote = kEntryBoundNote;
    const SupportLattice& lat_a = inv_r.lattice;
    const SupportLattice& lat_b = inv_r_prime.lattice;

    const std::vector<Mat2> candidates = admissible_linear_maps(lat_a, lat_b);
    report.candidates_checked = (long long)candidates.size();
    if (candidates.empty()) {
        report.status = EquivStatus::Obstructed;
        report.log.push_back(
            {Mat2::identity(),
             "no admissible linear map: support difference sets admit no bijection"});
        return report;
    }

    const std::vector<Vec2> pts_a = lat_a.points();
    const std::vector<Vec2> pts_b = lat_b.points();
    const Mat2 v_r = inv_r.form.matrix;
    const Mat2 v_rp = inv_r_prime.form.matrix;

    for (const Mat2& f : candidates) {
        // (i) pairing preservation on difference classes, which span H_1
        const Mat2 pulled = f.transposed() * v_rp * f;
        if (pulled != v_r) {
            report.log.push_back({f, "form mismatch: f^T V' f = " + pulled.to_string() +
                                         " != " + v_r.to_string()});
            continue;
        }
        // (ii) affine placement matching all known dimensions
        const auto t = placement_translation(pts_a, pts_b, f);
        if (!t) {
            report.log.push_back({f, "no affine placement maps the support onto the target"});
            continue;
        }
        bool ok = true;
        std::string reject;
        std::vector<CornerMatch> matches;
        for (const Vec2& p : pts_a) {
            const Vec2 fp = f * p;
            const Vec2 q{fp[0] + (*t)[0], fp[1] + (*t)[1]};
            const auto dim_a = lat_a.known_dim(p);
            const auto dim_b = lat_b.known_dim(q);
            if (dim_a && dim_b && *dim_a != *dim_b) {
                ok = false;
                reject = "dimension mismatch at " + vec_str(p) + " -> " + vec_str(q) + ": " +
                         std::to_string(*dim_a) + " != " + std::to_string(*dim_b);
                break;
            }
            if (dim_a && dim_b) matches.push_back({p, q, *dim_a});
        }
        if (!ok) {
            report.log.push_back({f, reject});
            continue;
        }
        report.status = EquivStatus::Inconclusive;
        report.witness = EquivalenceWitness{f, *t, std::move(matches)};
        return report;
    }
    report.status = EquivStatus::Obstructed;
    return report;
}

bool verify_report(const SurfaceInvariant& inv_r, const SurfaceInvariant& inv_r_prime,
                   const EquivalenceReport& report) {
    const EquivalenceReport replay = check_equivalence(inv_r, inv_r_prime);
    if (replay.status != report.status) return false;
    if (replay.candidates_checked != report.candidates_checked) return false;
    if (report.status == EquivStatus::Inconclusive) {
        if (!report.witness || !replay.witness) return false;
        const Mat2& f = report.witness->f;
        if (f.transposed() * inv_r_prime.form.matrix * f != inv_r.form.matrix) return false;
        for (const CornerMatch& cm : report.witness->corners) {
            const auto da = inv_r.lattice.known_dim(cm.from);
            const auto db = inv_r_prime.lattice.known_dim(cm.to);
            if (!da || !db || *da != cm.dim || *db != cm.dim) return false;
        }
        return true;
    }
    // every candidate must carry a rejection reason
    if ((long long)report.log.size() < report.candidates_checked) return false;
    std::set<Mat2> rejected;
    for (const Rejection& r : report.log) rejected.insert(r.f);
    for (const Mat2& f : admissible_linear_maps(inv_r.lattice, inv_r_prime.lattice))
        if (!rejected.count(f)) return false;
    return true;
}

std::string EquivalenceReport::to_string() const {
    std::ostringstream os;
    os << "status " << status_name(status) << "\ncandidates_checked " << candidates_checked
       << "\n";
    if (witness) {
        os << "witness f " << witness->f.to_string() << " translation "
           << vec_str(witness->translation) << "\n";
        for (const CornerMatch& cm : witness->corners)
            os << "  match " << vec_str(cm.from) << " -> " << vec_str(cm.to) << " dim "
               << cm.dim << "\n";
    }
    for (const Rejection& r : log)
        os << "reject " << r.f.to_string() << ": " << r.reason << "\n";
    os << "note: " << footnote << "\n";
    return os.str();
}

PaperCertificate paper_certificate(long long l, int n, int m, int k) {
    if (l == 0) throw std::invalid_argument("theorem hypothesis violated: framing l must be nonzero");
    if (n < 2 || m < 2) throw std::invalid_argument("certificate needs extents n, m >= 2");
    if (k < 1 || k > n) throw std::invalid_argument("certificate needs 1 <= k <= n");

    PaperCertificate cert;
    cert.l = l;
    cert.n = n;
    cert.m = m;
    cert.k = k;
    cert.positive_branch = l > 0;

    const auto [v_r, v_rp] = family_forms(l);

    // square of the diagonal difference class in the c-basis
    const Vec2 diag = cert.positive_branch ? Vec2{n, m} : Vec2{-(long long)n, m};
    cert.target_square = pairing(v_r, diag, diag);

    // all (alpha, beta) with alpha^2 l - alpha beta = target inside the box
    for (long long alpha = -n; alpha <= n; ++alpha)
        for (long long beta = -m; beta <= m; ++beta)
            if (alpha * alpha * l - alpha * beta == cert.target_square)
                cert.target_solutions.push_back({alpha, beta});
    const long long sm = cert.positive_branch ? -m : m;
    cert.target_forced =
        cert.target_solutions.size() == 2 &&
        ((cert.target_solutions[0] == Vec2{-(long long)n, -sm} &&
          cert.target_solutions[1] == Vec2{(long long)n, sm}) ||
         (cert.target_solutions[0] == Vec2{(long long)n, sm} &&
          cert.target_solutions[1] == Vec2{-(long long)n, -sm}));

    // second square: the step to the nearest nonzero group along the first
    // axis; the diagonal position of the image forces the sign pattern and
    // |alpha| >= k
    cert.step_square = (long long)k * k * l;
    for (long long alpha = -n; alpha <= n; ++alpha)
        for (long long beta = -m; beta <= m; ++beta) {
            if (alpha * alpha * l - alpha * beta != cert.step_square) continue;
            if (std::abs(alpha) < k) continue;
            if (cert.positive_branch ? (alpha * beta > 0) : (alpha * beta < 0)) continue;
            cert.step_solutions.push_back({alpha, beta});
        }
    cert.step_forces_axis =
        cert.step_solutions.size() == 2 &&
        ((cert.step_solutions[0] == Vec2{-(long long)k, 0} &&
          cert.step_solutions[1] == Vec2{(long long)k, 0}) ||
         (cert.step_solutions[0] == Vec2{(long long)k, 0} &&
          cert.step_solutions[1] == Vec2{-(long long)k, 0}));

    // the two pairings that must agree but do not
    if (cert.positive_branch) {
        cert.pair_lhs = pairing(v_rp, {n, -(long long)m}, {k, 0});  // nkl + mk
        cert.pair_rhs = pairing(v_r, {n, m}, {k, 0});               // nkl
    } else {
        cert.pair_lhs = pairing(v_rp, {n, m}, {k, 0});                          // nkl - mk
        cert.pair_rhs = pairing(v_r, {-(long long)n, m}, {-(long long)k, 0});   // nkl
    }
    cert.contradiction = cert.target_forced && cert.step_forces_axis &&
                         std::abs(cert.pair_lhs) != std::abs(cert.pair_rhs);
    return cert;
}

std::string PaperCertificate::to_string() const {
    std::ostringstream os;
    os << "framing " << l << "\nextents " << n << " " << m << "\nstep k " << k << "\nbranch "
       << (positive_branch ? "l>0" : "l<0") << "\ntarget_square " << target_square
       << "\ntarget_solutions";
    for (const Vec2& s : target_solutions) os << " " << vec_str(s);
    os << "\ntarget_forced " << (target_forced ? "yes" : "no") << "\nstep_square " << step_square
       << "\nstep_solutions";
    for (const Vec2& s : step_solutions) os << " " << vec_str(s);
    os << "\nstep_forces_axis " << (step_forces_axis ? "yes" : "no") << "\npair_lhs " << pair_lhs
       << "\npair_rhs " << pair_rhs << "\ncontradiction "
       << (contradiction ? "established" : "not established") << "\n";
    return os.str();
}

}  // namespace sfh
