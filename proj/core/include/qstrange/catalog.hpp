#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qstrange/strange.hpp"

namespace qstrange {

/// One line of the catalog file: a named check with parameter ranges that
/// the runner expands into concrete jobs.
struct CatalogEntry {
    std::string name;
    std::string mode;   // formal | pair | strange | quantum
    std::string family; // identity / family / pair / quantum id
    int k_lo = 0, k_hi = 0;
    bool k_set = false;
    int a_lo = 0, a_hi = 0;
    bool a_set = false, a_all = false;
    int i_lo = 0, i_hi = 0;
    bool i_set = false, i_all = false;
    int order = 0;   // q-truncation order (formal / pair modes)
    int nmax = 0;    // pair mode
    int torder = 0;  // strange mode
    std::vector<int> roots;
    Validity validity = Validity::Formal;
    int line = 0;
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    std::string digest; // FNV-1a of the source text, hex
    std::string source; // path or "<builtin>"
};

// the catalog shipped with the library
const std::string& default_catalog_text();

// parses catalog text; throws catalog_parse_error with line/column info
Catalog parse_catalog(const std::string& text, const std::string& source_name);
Catalog load_catalog_file(const std::string& path);
Catalog builtin_catalog();

std::uint64_t fnv1a(const std::string& data);
std::string fnv1a_hex(const std::string& data);

/// A concrete executable check: one parameter assignment of one entry.
struct Job {
    std::string entry;
    std::string mode;
    std::string family;
    int k = 0, a = 0, i = 0, root = 0;
    int order = 0, nmax = 0, torder = 0;
    Validity validity = Validity::Formal;
};

// expands ranges (and '*' wildcards) into concrete jobs, in catalog order
std::vector<Job> expand_entry(const CatalogEntry& e);

// shell-style glob with '*' and '?' against entry and family names
bool glob_match(const std::string& pattern, const std::string& text);

} // namespace qstrange
