#include "sfh/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace sfh {

namespace {

using nlohmann::ordered_json;

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

ordered_json report_header(const std::string& command) {
    ordered_json j;
    j["tool"] = "sfhdist";
    j["schema"] = 1;
    j["generated_at"] = iso_timestamp();
    j["command"] = command;
    return j;
}

ordered_json mat2_to_json(const Mat2& m) {
    return ordered_json::array({{m.at(0, 0), m.at(0, 1)}, {m.at(1, 0), m.at(1, 1)}});
}

Mat2 mat2_from_json(const ordered_json& j) {
    return Mat2{{{{j[0][0].get<long long>(), j[0][1].get<long long>()},
                  {j[1][0].get<long long>(), j[1][1].get<long long>()}}}};
}

ordered_json group_to_json(const BigradedGroup& g) {
    ordered_json rows = ordered_json::array();
    for (const auto& [bg, d] : g.dims())
        rows.push_back(ordered_json::array({bg.maslov, bg.alexander, d}));
    return rows;
}

BigradedGroup group_from_json(const ordered_json& j) {
    BigradedGroup g;
    for (const auto& row : j)
        g.add({row[0].get<int>(), row[1].get<int>()}, row[2].get<long long>());
    return g;
}

ordered_json poly_to_json(const LaurentPoly& p) {
    ordered_json rows = ordered_json::array();
    for (const auto& [e, c] : p.coefficients()) rows.push_back(ordered_json::array({e, c}));
    return rows;
}

}  // namespace

nlohmann::ordered_json invariant_to_json(const SurfaceInvariant& inv) {
    ordered_json j;
    j["name"] = inv.surface_name;
    j["form"] = {{"matrix", mat2_to_json(inv.form.matrix)},
                 {"basis", {inv.form.basis_labels[0], inv.form.basis_labels[1]}}};
    ordered_json lat;
    lat["extents"] = {inv.lattice.extent_n, inv.lattice.extent_m};
    lat["spacing"] = {inv.lattice.spacing_labels[0], inv.lattice.spacing_labels[1]};
    lat["interior_known"] = inv.lattice.interior_known;
    lat["transform"] = mat2_to_json(inv.lattice.transform);
    ordered_json corners;
    for (Corner c : kCorners) corners[corner_name(c)] = group_to_json(inv.lattice.corner(c));
    lat["corners"] = corners;
    j["lattice"] = lat;
    return j;
}

SurfaceInvariant invariant_from_json(const nlohmann::ordered_json& j) {
    SurfaceInvariant inv;
    inv.surface_name = j.at("name").get<std::string>();
    inv.form.matrix = mat2_from_json(j.at("form").at("matrix"));
    inv.form.basis_labels = {j.at("form").at("basis")[0].get<std::string>(),
                             j.at("form").at("basis")[1].get<std::string>()};
    const auto& lat = j.at("lattice");
    inv.lattice.extent_n = lat.at("extents")[0].get<int>();
    inv.lattice.extent_m = lat.at("extents")[1].get<int>();
    inv.lattice.spacing_labels = {lat.at("spacing")[0].get<std::string>(),
                                  lat.at("spacing")[1].get<std::string>()};
    inv.lattice.interior_known = lat.at("interior_known").get<bool>();
    inv.lattice.transform = mat2_from_json(lat.at("transform"));
    for (Corner c : kCorners)
        inv.lattice.corner_groups[size_t(c)] =
            group_from_json(lat.at("corners").at(corner_name(c)));
    return inv;
}

nlohmann::ordered_json report_to_json(const EquivalenceReport& report) {
    ordered_json j;
    j["status"] = status_name(report.status);
    j["candidates_checked"] = report.candidates_checked;
    if (report.witness) {
        ordered_json w;
        w["f"] = mat2_to_json(report.witness->f);
        w["translation"] = {report.witness->translation[0], report.witness->translation[1]};
        ordered_json matches = ordered_json::array();
        for (const CornerMatch& cm : report.witness->corners)
            matches.push_back({{"from", {cm.from[0], cm.from[1]}},
                               {"to", {cm.to[0], cm.to[1]}},
                               {"dim", cm.dim}});
        w["matches"] = matches;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    ordered_json rejections = ordered_json::array();
    for (const Rejection& r : report.log)
        rejections.push_back({{"f", mat2_to_json(r.f)}, {"reason", r.reason}});
    j["rejections"] = rejections;
    j["footnote"] = report.footnote;
    return j;
}

EquivalenceReport report_from_json(const nlohmann::ordered_json& j) {
    EquivalenceReport report;
    const std::string status = j.at("status").get<std::string>();
    report.status = status == "OBSTRUCTED" ? EquivStatus::Obstructed : EquivStatus::Inconclusive;
    report.candidates_checked = j.at("candidates_checked").get<long long>();
    if (!j.at("witness").is_null()) {
        EquivalenceWitness w;
        w.f = mat2_from_json(j.at("witness").at("f"));
        w.translation = {j.at("witness").at("translation")[0].get<long long>(),
                         j.at("witness").at("translation")[1].get<long long>()};
        for (const auto& m : j.at("witness").at("matches"))
            w.corners.push_back({{m.at("from")[0].get<long long>(), m.at("from")[1].get<long long>()},
                                 {m.at("to")[0].get<long long>(), m.at("to")[1].get<long long>()},
                                 m.at("dim").get<long long>()});
        report.witness = std::move(w);
    }
    for (const auto& r : j.at("rejections"))
        report.log.push_back({mat2_from_json(r.at("f")), r.at("reason").get<std::string>()});
    report.footnote = j.at("footnote").get<std::string>();
    return report;
}

KnotRecord resolve_knot(const std::string& selector) {
    const auto& names = builtin_names();
    if (selector == "5_1" || std::find(names.begin(), names.end(), selector) != names.end())
        return builtin(selector);
    if (std::filesystem::exists(selector)) {
        KnotRecord rec;
        rec.name = std::filesystem::path(selector).stem().string();
        rec.grid = load_grid(selector);
        return rec;
    }
    throw std::invalid_argument("unknown knot '" + selector +
                                "': not a builtin name and no such file");
}

FamilyInvariants build_family_invariants(KnotRecord k1, KnotRecord k2, long long framing,
                                         long long framing2, const InvariantCache* cache) {
    FamilyInvariants fam;
    compute(k1, cache);
    compute(k2, cache);
    fam.f1 = annulus_factor(k1.top(), framing, k1.name);
    fam.f2 = annulus_factor(k2.top(), framing2, k2.name);
    fam.breadth1 = breadth_check(fam.f1);
    fam.breadth2 = breadth_check(fam.f2);
    auto [v_r, v_rp] = family_forms(framing, framing2);
    fam.inv_r = SurfaceInvariant{v_r, murasugi_tensor(fam.f1, fam.f2, {"c1", "c2"}), "R"};
    fam.inv_r_prime =
        SurfaceInvariant{v_rp, murasugi_tensor(fam.f1, fam.f2, {"d1", "d2"}), "Rprime"};
    fam.k1 = std::move(k1);
    fam.k2 = std::move(k2);
    return fam;
}

namespace {

ordered_json factor_to_json(const AnnulusFactor& f, const BreadthCheck& b) {
    ordered_json j;
    j["knot"] = f.knot_name;
    j["framing"] = f.framing;
    j["genus"] = f.genus;
    j["length"] = f.length;
    j["end_dim"] = f.end_group_high.total_dim();
    j["end_group"] = group_to_json(f.end_group_high);
    j["breadth"] = {{"z", b.z}, {"x_s", b.x_s}, {"ok", b.ok}};
    return j;
}

void print_factor(std::ostream& out, const AnnulusFactor& f, const BreadthCheck& b) {
    out << "  annulus " << f.knot_name << ": framing " << f.framing << ", genus " << f.genus
        << ", length " << f.length << ", end dims " << f.end_group_low.total_dim() << "/"
        << f.end_group_high.total_dim() << " [" << f.end_group_high.to_string() << "]\n"
        << "    breadth z = " << b.z << ", x_s = " << b.x_s << " -> "
        << (b.ok ? "ok" : "MISMATCH") << "\n";
}

int run_hfk(const RunConfig& cfg, std::ostream& out) {
    KnotRecord rec = resolve_knot(cfg.knots.at(0));
    InvariantCache cache = InvariantCache::from_env();
    compute(rec, cfg.use_cache ? &cache : nullptr);
    const HfkTop top = rec.top();
    const LaurentPoly alex = rec.alexander();
    if (cfg.format == OutputFormat::Record) {
        ordered_json j = report_header("hfk");
        j["knot"] = rec.name;
        j["grid_size"] = rec.grid.size;
        j["genus"] = top.genus;
        j["top_rank"] = top.top_rank;
        ordered_json tm;
        for (const auto& [m, d] : top.top_maslov_dims) tm[std::to_string(m)] = d;
        j["top_maslov_dims"] = tm;
        j["homology"] = group_to_json(*rec.homology);
        j["total_dim"] = rec.homology->total_dim();
        j["alexander"] = poly_to_json(alex);
        out << j.dump(2) << "\n";
    } else {
        out << "knot " << rec.name << " (grid size " << rec.grid.size << ")\n"
            << "genus " << top.genus << "\n"
            << "top rank " << top.top_rank << " at Alexander " << top.genus << " (";
        bool first = true;
        for (const auto& [m, d] : top.top_maslov_dims) {
            if (!first) out << ", ";
            out << "Maslov " << m << ": " << d;
            first = false;
        }
        out << ")\n"
            << "homology " << rec.homology->to_string() << "\n"
            << "total dim " << rec.homology->total_dim() << "\n"
            << "alexander " << alex.to_string() << "\n";
    }
    return 0;
}

int run_alex(const RunConfig& cfg, std::ostream& out) {
    if (cfg.family_mode) {
        const long long l = cfg.framing.value();
        const auto [v_r, v_rp] = family_forms(l, cfg.framing2);
        const LaurentPoly d_r = alexander_from_seifert(v_r);
        const LaurentPoly d_rp = alexander_from_seifert(v_rp);
        if (cfg.format == OutputFormat::Record) {
            ordered_json j = report_header("alex");
            j["family"] = {{"framing", l}, {"framing2", cfg.framing2}};
            j["V_R"] = mat2_to_json(v_r.matrix);
            j["alexander"] = poly_to_json(d_r);
            j["alexander_dual"] = poly_to_json(d_rp);
            j["trivial"] = d_r == LaurentPoly::one();
            out << j.dump(2) << "\n";
        } else {
            out << "family plumbing, framings (" << l << ", " << cfg.framing2 << ")\n"
                << "V_R = " << v_r.matrix.to_string() << "\n"
                << "alexander(R)  " << d_r.to_string() << "\n"
                << "alexander(R') " << d_rp.to_string() << "\n"
                << (d_r == LaurentPoly::one() ? "trivial: yes\n" : "trivial: no\n");
        }
        return 0;
    }
    KnotRecord rec = resolve_knot(cfg.knots.at(0));
    InvariantCache cache = InvariantCache::from_env();
    compute(rec, cfg.use_cache ? &cache : nullptr);
    const LaurentPoly from_grid = rec.alexander();
    std::optional<LaurentPoly> from_matrix;
    if (rec.reference_seifert) from_matrix = alexander_from_seifert(*rec.reference_seifert);
    if (cfg.format == OutputFormat::Record) {
        ordered_json j = report_header("alex");
        j["knot"] = rec.name;
        j["from_grid"] = poly_to_json(from_grid);
        j["from_seifert_matrix"] = from_matrix ? poly_to_json(*from_matrix) : ordered_json();
        j["agree"] = from_matrix ? ordered_json(from_grid == *from_matrix) : ordered_json();
        out << j.dump(2) << "\n";
    } else {
        out << "knot " << rec.name << "\n"
            << "alexander (grid homology)   " << from_grid.to_string() << "\n";
        if (from_matrix)
            out << "alexander (Seifert matrix)  " << from_matrix->to_string() << "\n"
                << "agree: " << (from_grid == *from_matrix ? "yes" : "no") << "\n";
    }
    return 0;
}

ordered_json family_to_json(const FamilyInvariants& fam, long long framing, long long framing2) {
    ordered_json j;
    j["k1"] = fam.k1.name;
    j["k2"] = fam.k2.name;
    j["framing"] = framing;
    j["framing2"] = framing2;
    j["factor1"] = factor_to_json(fam.f1, fam.breadth1);
    j["factor2"] = factor_to_json(fam.f2, fam.breadth2);
    j["R"] = invariant_to_json(fam.inv_r);
    j["Rprime"] = invariant_to_json(fam.inv_r_prime);
    const LaurentPoly alex = alexander_from_seifert(fam.inv_r.form);
    j["alexander"] = poly_to_json(alex);
    j["alexander_trivial"] = alex == LaurentPoly::one();
    return j;
}

void print_family(std::ostream& out, const FamilyInvariants& fam, long long framing,
                  long long framing2) {
    out << "plumbed knot P(" << fam.k1.name << ", " << fam.k2.name << "), framings (" << framing
        << ", " << framing2 << ")\n";
    print_factor(out, fam.f1, fam.breadth1);
    print_factor(out, fam.f2, fam.breadth2);
    for (const SurfaceInvariant* inv : {&fam.inv_r, &fam.inv_r_prime}) {
        out << "surface " << inv->surface_name << ": form " << inv->form.matrix.to_string()
            << " in basis (" << inv->form.basis_labels[0] << "," << inv->form.basis_labels[1]
            << ")\n  support " << inv->lattice.to_string() << "\n";
    }
    const LaurentPoly alex = alexander_from_seifert(fam.inv_r.form);
    out << "alexander(P) " << alex.to_string()
        << (alex == LaurentPoly::one() ? "  (trivial)" : "") << "\n";
}

int run_family(const RunConfig& cfg, std::ostream& out) {
    InvariantCache cache = InvariantCache::from_env();
    FamilyInvariants fam = build_family_invariants(
        resolve_knot(cfg.knots.at(0)), resolve_knot(cfg.knots.at(1)), cfg.framing.value(),
        cfg.framing2, cfg.use_cache ? &cache : nullptr);
    if (cfg.format == OutputFormat::Record) {
        ordered_json j = report_header("family");
        j["family"] = family_to_json(fam, cfg.framing.value(), cfg.framing2);
        out << j.dump(2) << "\n";
    } else {
        print_family(out, fam, cfg.framing.value(), cfg.framing2);
    }
    return 0;
}

int run_distinguish(const RunConfig& cfg, std::ostream& out) {
    InvariantCache cache = InvariantCache::from_env();
    FamilyInvariants fam = build_family_invariants(
        resolve_knot(cfg.knots.at(0)), resolve_knot(cfg.knots.at(1)), cfg.framing.value(),
        cfg.framing2, cfg.use_cache ? &cache : nullptr);
    const EquivalenceReport report = check_equivalence(fam.inv_r, fam.inv_r_prime);
    if (cfg.format == OutputFormat::Record) {
        ordered_json j = report_header("distinguish");
        j["family"] = family_to_json(fam, cfg.framing.value(), cfg.framing2);
        j["result"] = report_to_json(report);
        out << j.dump(2) << "\n";
    } else {
        print_family(out, fam, cfg.framing.value(), cfg.framing2);
        out << report.to_string();
        out << "status: " << status_name(report.status) << "\n";
    }
    return 0;
}

int run_certificate(const RunConfig& cfg, std::ostream& out) {
    const int k = cfg.cert_k.value_or(cfg.cert_n);
    const PaperCertificate cert =
        paper_certificate(cfg.framing.value(), cfg.cert_n, cfg.cert_m, k);
    if (cfg.format == OutputFormat::Record) {
        ordered_json j = report_header("certificate");
        j["l"] = cert.l;
        j["n"] = cert.n;
        j["m"] = cert.m;
        j["k"] = cert.k;
        j["branch"] = cert.positive_branch ? "l>0" : "l<0";
        j["target_square"] = cert.target_square;
        ordered_json sols = ordered_json::array();
        for (const Vec2& s : cert.target_solutions) sols.push_back({s[0], s[1]});
        j["target_solutions"] = sols;
        j["target_forced"] = cert.target_forced;
        j["step_square"] = cert.step_square;
        ordered_json steps = ordered_json::array();
        for (const Vec2& s : cert.step_solutions) steps.push_back({s[0], s[1]});
        j["step_solutions"] = steps;
        j["step_forces_axis"] = cert.step_forces_axis;
        j["pair"] = {cert.pair_lhs, cert.pair_rhs};
        j["contradiction"] = cert.contradiction;
        out << j.dump(2) << "\n";
    } else {
        out << cert.to_string();
    }
    return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::Hfk: return run_hfk(cfg, out);
            case Command::Alex: return run_alex(cfg, out);
            case Command::Family: return run_family(cfg, out);
            case Command::Distinguish: return run_distinguish(cfg, out);
            case Command::Certificate: return run_certificate(cfg, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"sutured Floer homology toolkit for plumbed Seifert surfaces"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string format = "text";
    bool no_cache = false;
    long long framing = 0;
    bool have_framing = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: text or record")
            ->check(CLI::IsMember({"text", "record"}));
        sub->add_flag("--no-cache", no_cache, "disable the invariant cache");
    };
    auto add_framing = [&](CLI::App* sub) {
        sub->add_option("--framing", framing, "framing of the first annulus")
            ->each([&](const std::string&) { have_framing = true; });
        sub->add_option("--framing2", cfg.framing2, "framing of the second annulus (default 0)");
    };

    std::string knot, k1, k2;
    CLI::App* hfk = app.add_subcommand("hfk", "bigraded grid homology of one knot");
    hfk->add_option("knot", knot, "builtin name or grid file")->required();
    add_common(hfk);

    CLI::App* alex = app.add_subcommand("alex", "Alexander polynomial via grid homology");
    alex->add_option("knot", knot, "builtin name or grid file");
    alex->add_flag("--family", cfg.family_mode, "polynomial of the plumbed family knot");
    add_common(alex);
    add_framing(alex);

    CLI::App* family = app.add_subcommand("family", "surface invariants of both plumbings");
    family->add_option("--k1", k1, "first knot")->required();
    family->add_option("--k2", k2, "second knot")->required();
    add_common(family);
    add_framing(family);

    CLI::App* dist = app.add_subcommand("distinguish", "search for a compatible isomorphism");
    dist->add_option("--k1", k1, "first knot")->required();
    dist->add_option("--k2", k2, "second knot")->required();
    add_common(dist);
    add_framing(dist);

    CLI::App* cert = app.add_subcommand("certificate", "inequality-chain certificate");
    add_common(cert);
    add_framing(cert);
    cert->add_option("--n", cfg.cert_n, "first extent (default 2)")->check(CLI::Range(2, 64));
    cert->add_option("--m", cfg.cert_m, "second extent (default 2)")->check(CLI::Range(2, 64));
    int cert_k = 0;
    CLI::Option* k_opt = cert->add_option("--k", cert_k, "step index (default n)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    cfg.format = format == "record" ? OutputFormat::Record : OutputFormat::Text;
    cfg.use_cache = !no_cache;
    if (have_framing) cfg.framing = framing;
    if (k_opt->count() > 0) cfg.cert_k = cert_k;

    if (hfk->parsed()) {
        cfg.command = Command::Hfk;
        cfg.knots = {knot};
    } else if (alex->parsed()) {
        cfg.command = Command::Alex;
        if (cfg.family_mode) {
            if (!cfg.framing) {
                err << "error: alex --family requires --framing\n";
                return 1;
            }
        } else if (knot.empty()) {
            err << "error: alex needs a knot or --family\n";
            return 1;
        } else {
            cfg.knots = {knot};
        }
    } else if (family->parsed() || dist->parsed()) {
        cfg.command = family->parsed() ? Command::Family : Command::Distinguish;
        cfg.knots = {k1, k2};
        if (!cfg.framing) {
            err << "error: " << (family->parsed() ? "family" : "distinguish")
                << " requires --framing\n";
            return 1;
        }
    } else if (cert->parsed()) {
        cfg.command = Command::Certificate;
        if (!cfg.framing || *cfg.framing == 0) {
            err << "error: certificate requires a nonzero --framing\n";
            return 1;
        }
        if (cfg.cert_k && (*cfg.cert_k < 1 || *cfg.cert_k > cfg.cert_n)) {
            err << "error: --k must lie in 1..n\n";
            return 1;
        }
    }
    return run(cfg, out, err);
}

}  // namespace sfh
