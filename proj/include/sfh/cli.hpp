#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sfh/knotdb.hpp"
#include "sfh/obstruct.hpp"

#include "json.hpp"

namespace sfh {

enum class Command { Hfk, Alex, Family, Distinguish, Certificate };
enum class OutputFormat { Text, Record };

struct RunConfig {
    Command command = Command::Hfk;
    std::vector<std::string> knots;  // builtin names or .grid paths
    bool family_mode = false;        // alex --family
    std::optional<long long> framing;
    long long framing2 = 0;
    OutputFormat format = OutputFormat::Text;
    bool use_cache = true;
    int cert_n = 2, cert_m = 2;
    std::optional<int> cert_k;  // defaults to cert_n
};

// Knot selector: builtin name, or a path to a grid file.
KnotRecord resolve_knot(const std::string& selector);

// The family pipeline: computes both knots' top groups, builds the annulus
// factors with framings (l, l2), tensors them, and attaches the Seifert
// forms for the two plumbings.
struct FamilyInvariants {
    KnotRecord k1, k2;
    AnnulusFactor f1, f2;
    BreadthCheck breadth1, breadth2;
    SurfaceInvariant inv_r, inv_r_prime;
};

FamilyInvariants build_family_invariants(KnotRecord k1, KnotRecord k2, long long framing,
                                         long long framing2, const InvariantCache* cache);

// JSON encodings used by the record output format; stable field order.
nlohmann::ordered_json invariant_to_json(const SurfaceInvariant& inv);
SurfaceInvariant invariant_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json report_to_json(const EquivalenceReport& report);
EquivalenceReport report_from_json(const nlohmann::ordered_json& j);

// Executes a parsed config; returns the process exit status. Throws nothing:
// errors are reported on `err` with a nonzero return.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command line entry point (parsing + run).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sfh
