#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sfh/grid.hpp"
#include "sfh/seifert.hpp"

namespace sfh {

// One knot of the bundled table: a grid diagram plus, when available, a
// reference Seifert matrix serving as an independent Alexander-polynomial
// oracle, and the computed grid invariants.
struct KnotRecord {
    std::string name;
    GridDiagram grid;
    std::optional<IntMatrix> reference_seifert;
    std::optional<BigradedGroup> homology;  // filled by compute()

    HfkTop top() const;  // requires homology
    LaurentPoly alexander() const;
};

// Grid file format: `size N`, `x` and `o` lines with N 0-indexed rows
// (column -> row), `#` comments. Parse failures and invariant violations
// carry a file:line diagnostic.
GridDiagram parse_grid(std::istream& in, const std::string& source_name);
GridDiagram load_grid(const std::filesystem::path& path);
void write_grid(std::ostream& out, const GridDiagram& g);
std::string grid_to_record(const GridDiagram& g);

// Directory holding the bundled .grid files: $SFHDIST_DATA when set, else
// the location baked in at configure time.
std::filesystem::path data_dir();

const std::vector<std::string>& builtin_names();
// unknot, trefoil_rh, trefoil_lh, figure8, cinquefoil (alias 5_1);
// trefoil_lh is the grid mirror of the bundled right-handed diagram.
KnotRecord builtin(const std::string& name);

// FNV-1a over the canonical grid record; keys the invariant cache.
std::uint64_t grid_content_hash(const GridDiagram& g);

// One human-readable record per grid under <dir>/<hash>.inv. Corrupt
// entries are treated as misses (the caller recomputes and overwrites);
// a warning is emitted on stderr.
class InvariantCache {
public:
    explicit InvariantCache(std::filesystem::path dir);
    // $SFHDIST_CACHE when set, else ./cache
    static InvariantCache from_env();

    const std::filesystem::path& directory() const { return dir_; }
    std::filesystem::path entry_path(const GridDiagram& g) const;

    std::optional<BigradedGroup> fetch(const GridDiagram& g) const;
    void store(const GridDiagram& g, const BigradedGroup& hom) const;

private:
    std::filesystem::path dir_;
};

// Homology through the cache; pass nullptr to compute directly.
BigradedGroup homology_cached(const GridDiagram& g, const InvariantCache* cache);

// Fills record.homology (through the cache when given) and cross-checks the
// grid Alexander polynomial against the reference Seifert matrix if present.
void compute(KnotRecord& record, const InvariantCache* cache = nullptr);

}  // namespace sfh
