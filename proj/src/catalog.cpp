#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include "chromabound/constructions.hpp"
#include "chromabound/graph_io.hpp"

namespace chromabound {

namespace {

struct CatalogEntry {
    const char* name;
    const char* graph6;
};

// Alphabetical by name. The encodings are fixed byte strings; the
// construction each one came from is re-derived and compared in the test
// suite, so a drifting literal fails loudly there too.
constexpr std::array<CatalogEntry, 19> kCatalog{{
    {"Clebsch", "Or`HOm@OhHBBEGHCgPSAJ"},
    {"Desargues", "ShCGGC@_K?G?G?CA@?_GC?_O@G_@G_?cO"},
    {"Dodecahedron", "ShCGGC@_K?G?GAC@@?OGA?_G@?O@OO?gG"},
    {"Dyck", "_hEGGC@AG?_@?@?G_?H?@??C?AG??GC?C??@??AG_??_@?@???@???G_G??G?@?@O???C???AG?G??K??C?C"},
    {"Folkman", "ShEGGCPIG__@?P?ggGL?@O@C?IGGGKS?C"},
    {"Franklin", "KhEGHD@AG_oP"},
    {"Frucht", "KhCWKCBAH?w@"},
    {"Golomb", "I|eMI?P@W"},
    {"Gray", "u??????????????????????????????????????????????????????????C?_C?OA?O?_C?_?_C?_?OA?O?C?_C??_C?_?A?OA??C?_C?c_????QO????Cc??????c_????AQ?????Cc??????Cc?????AQ??????c_??w???????w???????[???????F????????w???????B_???????F????????F????????B_????"},
    {"Heawood", "M???FAW`agHOK_J??"},
    {"Hexahedron", "GlCiKS"},
    {"MoebiusKantor", "OhCGKE?O@?ACAC@I?Q_AS"},
    {"MoserSpindle", "FzaGw"},
    {"Nauru", "WhCGGC@?G?o@_?O?C??_?A??CA?CA?AD??`O?CI??Og??`O"},
    {"Octahedron", "E]~o"},
    {"Pappus", "QhEGGD@?G__P?@G?_GGO@?CE?AG"},
    {"Petersen", "IheA@GUAo"},
    {"Thomsen", "EFz_"},
    {"TruncatedTetrahedron", "K{CY?SBG?G_F"},
}};

// FNV-1a of every "name=graph6\n" in table order, recomputed on first
// lookup. Catches accidental edits of the literals above.
constexpr std::uint64_t kCatalogChecksum = 0x8fae426ebf2a41e6ULL;

void verify_catalog() {
    static const bool ok = [] {
        std::uint64_t h = 14695981039346656037ULL;
        auto mix = [&h](const char* s) {
            for (; *s; ++s) {
                h ^= static_cast<unsigned char>(*s);
                h *= 1099511628211ULL;
            }
        };
        for (const auto& entry : kCatalog) {
            mix(entry.name);
            mix("=");
            mix(entry.graph6);
            mix("\n");
        }
        if (h != kCatalogChecksum)
            throw std::logic_error("catalog: embedded graph literals are corrupted");
        return true;
    }();
    (void)ok;
}

// Lookup key: lower case, with spaces, hyphens and underscores removed.
std::string normalized(const std::string& name) {
    std::string key;
    for (char c : name) {
        if (c == ' ' || c == '-' || c == '_') continue;
        key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return key;
}

}  // namespace

Graph named(const std::string& name) {
    verify_catalog();
    const std::string key = normalized(name);
    for (const auto& entry : kCatalog)
        if (normalized(entry.name) == key) return parse_graph(entry.graph6, GraphFormat::Graph6);
    std::ostringstream msg;
    msg << "named: unknown graph \"" << name << "\"; available:";
    for (const auto& entry : kCatalog) msg << " " << entry.name;
    throw std::invalid_argument(msg.str());
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    names.reserve(kCatalog.size());
    for (const auto& entry : kCatalog) names.emplace_back(entry.name);
    return names;
}

}  // namespace chromabound
