#include "pkern/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pkern/io.hpp"

namespace pkern {

std::string default_data_dir() {
    if (const char* env = std::getenv("PKERN_DATA_DIR"); env && *env) return env;
#ifdef PKERN_DATA_DIR
    return PKERN_DATA_DIR;
#else
    return "data/kernels";
#endif
}

std::uint64_t content_checksum(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

struct CatalogRow {
    std::string name, family, pdp;
    int l = 0;
    double exponent = 0;
    std::uint64_t checksum = 0;
};

std::vector<CatalogRow> read_catalog(const std::string& dir) {
    const std::string path = dir + "/catalog.tsv";
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open " + path);
    std::vector<CatalogRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        CatalogRow r;
        std::string sum;
        if (!(ss >> r.name >> r.l >> r.family >> r.exponent >> r.pdp >> sum))
            throw FixtureError("bad catalog line '" + line + "'");
        r.checksum = std::stoull(sum, nullptr, 16);
        rows.push_back(std::move(r));
    }
    return rows;
}

NamedKernel load_row(const CatalogRow& r, const std::string& dir) {
    BitMatrix m;
    try {
        m = read_matrix_file(dir + "/" + r.name + ".txt");
    } catch (const ParseError& e) {
        throw FixtureError(std::string("fixture ") + r.name + ": " + e.what());
    }
    std::string canon;
    for (const auto& s : m.to_strings()) {
        if (!canon.empty()) canon += '\n';
        canon += s;
    }
    if (content_checksum(canon) != r.checksum)
        throw FixtureError("fixture " + r.name + " fails its checksum");
    if (!m.is_square() || m.n != r.l)
        throw FixtureError("fixture " + r.name + " has wrong shape");
    NamedKernel k{r.name, r.l, r.family, Kernel(m), parse_pdp_string(r.pdp), r.exponent};
    if (static_cast<int>(k.published_pdp.size()) != r.l)
        throw FixtureError("fixture " + r.name + " profile length mismatch");
    return k;
}

}  // namespace

std::vector<std::string> catalog(const std::string& dir) {
    const std::string d = dir.empty() ? default_data_dir() : dir;
    std::vector<std::string> names;
    for (const auto& r : read_catalog(d)) names.push_back(r.name);
    return names;
}

NamedKernel load_named_kernel(const std::string& name, const std::string& dir) {
    const std::string d = dir.empty() ? default_data_dir() : dir;
    for (const auto& r : read_catalog(d))
        if (r.name == name) return load_row(r, d);
    throw FixtureError("no fixture named " + name);
}

std::vector<NamedKernel> load_all(const std::string& dir) {
    const std::string d = dir.empty() ? default_data_dir() : dir;
    std::vector<NamedKernel> out;
    for (const auto& r : read_catalog(d)) out.push_back(load_row(r, d));
    return out;
}

}  // namespace pkern
