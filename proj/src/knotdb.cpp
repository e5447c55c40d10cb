#include "sfh/knotdb.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#ifndef SFH_DEFAULT_DATA_DIR
#define SFH_DEFAULT_DATA_DIR "data"
#endif

namespace sfh {

HfkTop KnotRecord::top() const {
    if (!homology) throw std::runtime_error("knot record has no computed homology");
    return hfk_top(*homology);
}

LaurentPoly KnotRecord::alexander() const {
    if (!homology) throw std::runtime_error("knot record has no computed homology");
    return alexander_from_euler(grid, *homology);
}

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& msg) {
    throw std::invalid_argument(source + ":" + std::to_string(line) + ": " + msg);
}

std::vector<int> parse_int_list(const std::string& source, int line, std::istringstream& is,
                                const std::string& field, int expected) {
    std::vector<int> out;
    long long value;
    while (is >> value) out.push_back(int(value));
    std::string trailing;
    is.clear();
    if (is >> trailing) parse_fail(source, line, field + ": unexpected token '" + trailing + "'");
    if (int(out.size()) != expected)
        parse_fail(source, line, field + ": expected " + std::to_string(expected) +
                                     " entries, got " + std::to_string(out.size()));
    return out;
}

}  // namespace

GridDiagram parse_grid(std::istream& in, const std::string& source_name) {
    GridDiagram g;
    bool have_size = false, have_x = false, have_o = false;
    std::string line;
    int lineno = 0;
    int x_line = 0, o_line = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string key;
        if (!(is >> key)) continue;
        if (key == "size") {
            if (have_size) parse_fail(source_name, lineno, "duplicate size field");
            if (!(is >> g.size) || g.size <= 0)
                parse_fail(source_name, lineno, "size: expected a positive integer");
            have_size = true;
        } else if (key == "x" || key == "o") {
            if (!have_size) parse_fail(source_name, lineno, key + ": size must come first");
            bool& have = key == "x" ? have_x : have_o;
            if (have) parse_fail(source_name, lineno, "duplicate " + key + " field");
            auto vals = parse_int_list(source_name, lineno, is, key, g.size);
            (key == "x" ? g.x : g.o) = std::move(vals);
            (key == "x" ? x_line : o_line) = lineno;
            have = true;
        } else {
            parse_fail(source_name, lineno, "unknown field '" + key + "'");
        }
    }
    if (!have_size) parse_fail(source_name, lineno, "missing size field");
    if (!have_x) parse_fail(source_name, lineno, "missing x field");
    if (!have_o) parse_fail(source_name, lineno, "missing o field");
    try {
        validate_diagram(g);
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        const int where = what.find("x is") == 0 ? x_line : what.find("o is") == 0 ? o_line : lineno;
        parse_fail(source_name, where, what);
    }
    return g;
}

GridDiagram load_grid(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open grid file: " + path.string());
    return parse_grid(in, path.string());
}

void write_grid(std::ostream& out, const GridDiagram& g) {
    out << "size " << g.size << "\nx";
    for (int v : g.x) out << " " << v;
    out << "\no";
    for (int v : g.o) out << " " << v;
    out << "\n";
}

std::string grid_to_record(const GridDiagram& g) {
    std::ostringstream os;
    write_grid(os, g);
    return os.str();
}

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("SFHDIST_DATA")) return env;
    return SFH_DEFAULT_DATA_DIR;
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"unknot", "trefoil_rh", "trefoil_lh", "figure8",
                                                "cinquefoil"};
    return names;
}

namespace {

std::optional<IntMatrix> reference_matrix(const std::string& name) {
    if (name == "trefoil_rh") return IntMatrix::from_rows({{-1, 1}, {0, -1}});
    if (name == "trefoil_lh") return IntMatrix::from_rows({{1, 0}, {-1, 1}});
    if (name == "figure8") return IntMatrix::from_rows({{1, 1}, {0, -1}});
    if (name == "cinquefoil")
        return IntMatrix::from_rows(
            {{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}});
    return std::nullopt;  // unknot
}

}  // namespace

KnotRecord builtin(const std::string& name) {
    std::string canonical = name == "5_1" ? "cinquefoil" : name;
    const auto& names = builtin_names();
    if (std::find(names.begin(), names.end(), canonical) == names.end())
        throw std::invalid_argument("unknown builtin knot '" + name + "'");
    KnotRecord rec;
    rec.name = canonical;
    if (canonical == "trefoil_lh") {
        rec.grid = mirror(load_grid(data_dir() / "grids" / "trefoil_rh.grid"));
    } else {
        rec.grid = load_grid(data_dir() / "grids" / (canonical + ".grid"));
    }
    rec.reference_seifert = reference_matrix(canonical);
    return rec;
}

std::uint64_t grid_content_hash(const GridDiagram& g) {
    const std::string record = grid_to_record(g);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : record) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

InvariantCache::InvariantCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

InvariantCache InvariantCache::from_env() {
    if (const char* env = std::getenv("SFHDIST_CACHE")) return InvariantCache(env);
    return InvariantCache("cache");
}

namespace {

std::string hash_hex(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

}  // namespace

std::filesystem::path InvariantCache::entry_path(const GridDiagram& g) const {
    return dir_ / (hash_hex(grid_content_hash(g)) + ".inv");
}

std::optional<BigradedGroup> InvariantCache::fetch(const GridDiagram& g) const {
    const auto path = entry_path(g);
    std::ifstream in(path);
    if (!in) return std::nullopt;  // miss
    try {
        std::string line;
        int lineno = 0;
        bool header_ok = false;
        GridDiagram stored;
        BigradedGroup hom;
        bool have_hom = false;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream is(line);
            std::string key;
            if (!(is >> key)) continue;
            if (lineno == 1) {
                int version = 0;
                if (key != "sfhdist-invariants" || !(is >> version) || version != 1)
                    throw std::runtime_error("bad header");
                header_ok = true;
            } else if (key == "size") {
                if (!(is >> stored.size)) throw std::runtime_error("bad size");
            } else if (key == "x" || key == "o") {
                auto& dst = key == "x" ? stored.x : stored.o;
                int v;
                while (is >> v) dst.push_back(v);
            } else if (key == "hom") {
                int maslov, alexander;
                long long dim;
                if (!(is >> maslov >> alexander >> dim) || dim <= 0)
                    throw std::runtime_error("bad hom line");
                hom.add({maslov, alexander}, dim);
                have_hom = true;
            } else if (key == "hash") {
                // informational; the stored grid is authoritative
            } else {
                throw std::runtime_error("unknown field '" + key + "'");
            }
        }
        if (!header_ok || !have_hom) throw std::runtime_error("incomplete entry");
        if (stored != g) throw std::runtime_error("entry stores a different grid");
        return hom;
    } catch (const std::exception& e) {
        std::cerr << "warning: corrupt cache entry " << path.string() << " (" << e.what()
                  << "); recomputing\n";
        return std::nullopt;
    }
}

void InvariantCache::store(const GridDiagram& g, const BigradedGroup& hom) const {
    std::filesystem::create_directories(dir_);
    const auto path = entry_path(g);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache entry: " + tmp);
        out << "sfhdist-invariants 1\n";
        out << "hash " << hash_hex(grid_content_hash(g)) << "\n";
        write_grid(out, g);
        for (const auto& [bg, d] : hom.dims())
            out << "hom " << bg.maslov << " " << bg.alexander << " " << d << "\n";
    }
    std::filesystem::rename(tmp, path);
}

BigradedGroup homology_cached(const GridDiagram& g, const InvariantCache* cache) {
    if (cache) {
        if (auto hit = cache->fetch(g)) return *hit;
    }
    BigradedGroup hom = homology(g);
    if (cache) cache->store(g, hom);
    return hom;
}

void compute(KnotRecord& record, const InvariantCache* cache) {
    if (record.homology) return;
    record.homology = homology_cached(record.grid, cache);
    if (record.reference_seifert) {
        const LaurentPoly from_grid = record.alexander();
        const LaurentPoly from_matrix = alexander_from_seifert(*record.reference_seifert);
        if (from_grid != from_matrix)
            throw std::runtime_error("knot " + record.name +
                                     ": grid Alexander polynomial " + from_grid.to_string() +
                                     " disagrees with the reference Seifert matrix value " +
                                     from_matrix.to_string());
    }
}

}  // namespace sfh
