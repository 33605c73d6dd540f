#include "qstrange/catalog.hpp"

#include <fstream>
#include <sstream>

#include "qstrange/identities.hpp"

namespace qstrange {

const std::string& default_catalog_text() {
    static const std::string text = R"(# qstrange verification catalog
# entry <name> mode=<formal|pair|strange|quantum> family=<id> [k=..] [a=..] [i=..]
#   [order=..] [nmax=..] [roots=..] [torder=..] validity=<tag>

# formal power series identities
entry andrews-gordon     mode=formal family=andrews_gordon    k=2..4 i=*  order=50 validity=formal
entry ag-variant         mode=formal family=ag_variant        k=1..4 a=*  order=40 validity=formal
entry family1-rr         mode=formal family=family1_rr        k=2..3      order=40 validity=formal
entry family2-rr         mode=formal family=family2_rr        k=2..3      order=40 validity=formal
entry family3-rr         mode=formal family=family3_rr        k=2..3 a=*  order=40 validity=formal
entry family4-rr         mode=formal family=family4_rr        k=2..3 a=*  order=40 validity=formal
entry qbinom-gen         mode=formal family=qbinom_gen        k=0..6      order=25 validity=formal
entry qbinom-gen-shifted mode=formal family=qbinom_gen_shifted k=0..6     order=25 validity=formal

# x-parametrized pre-strange identities and their sum-of-tails forms
entry x-zagier           mode=formal family=x_zagier                      order=30 validity=formal
entry x-family1          mode=formal family=x_family1         k=1        order=30 validity=formal
entry x-family2          mode=formal family=x_family2         k=1        order=30 validity=formal
entry x-family3          mode=formal family=x_family3         k=1 a=0    order=30 validity=formal
entry x-family4          mode=formal family=x_family4         k=1 a=0    order=30 validity=formal
entry x-hikami           mode=formal family=x_hikami          k=2 a=*    order=18 validity=formal
entry sot-zagier         mode=formal family=sot_zagier                   order=30 validity=formal
entry sot-family1        mode=formal family=sot_family1                  order=30 validity=formal
entry sot-family2        mode=formal family=sot_family2                  order=30 validity=formal
entry sot-family3        mode=formal family=sot_family3                  order=30 validity=formal
entry sot-family4        mode=formal family=sot_family4                  order=30 validity=formal

# Slater base pairs, as displayed
entry pair-base-zagier      mode=pair family=base_zagier      nmax=8 order=30 validity=formal
entry pair-base-family1     mode=pair family=base_family1     nmax=8 order=30 validity=formal
entry pair-base-family2     mode=pair family=base_family2     nmax=8 order=30 validity=formal
entry pair-base-family3-k1  mode=pair family=base_family3_k1  nmax=8 order=30 validity=formal
entry pair-base-family4-k1  mode=pair family=base_family4_k1  nmax=8 order=30 validity=formal
entry pair-base-hikami-x2   mode=pair family=base_hikami_x2   nmax=8 order=30 validity=formal
entry pair-base-family3-x2  mode=pair family=base_family3_x2  nmax=8 order=30 validity=formal
entry pair-base-family4-x2  mode=pair family=base_family4_x2  nmax=8 order=30 validity=formal

# iterated family pairs: verify_pair plus closed-form beta cross-check
entry pair-hikami        mode=pair family=hikami   k=1..3 a=*  nmax=4 order=25 validity=formal
entry pair-family1       mode=pair family=family1  k=1..3      nmax=4 order=25 validity=formal
entry pair-family2       mode=pair family=family2  k=1..3      nmax=4 order=25 validity=formal
entry pair-family3       mode=pair family=family3  k=1..3 a=*  nmax=4 order=25 validity=formal
entry pair-family4       mode=pair family=family4  k=1..3 a=*  nmax=4 order=25 validity=formal
entry pair-family5       mode=pair family=family5  k=2..3 a=*  nmax=4 order=25 validity=formal

# strange identities at roots of unity (exact t-expansions)
entry zagier-strange     mode=strange family=zagier   k=1         roots=1,2,3,4,5 torder=4 validity=all_roots
entry hikami-strange     mode=strange family=hikami   k=1..3 a=*  roots=1,2,3     torder=4 validity=all_roots
entry family1-strange    mode=strange family=family1  k=1..3      roots=1,3,5     torder=4 validity=odd_roots
entry family2-strange    mode=strange family=family2  k=1..2      roots=1,3,5     torder=4 validity=odd_roots
entry family3-strange    mode=strange family=family3  k=1..2 a=*  roots=1,3,5     torder=4 validity=odd_roots
entry family4-strange    mode=strange family=family4  k=1..2 a=*  roots=2,4       torder=4 validity=even_roots
entry family5-strange    mode=strange family=family5  k=2..3 a=*  roots=1,3       torder=4 validity=odd_roots

# quantum q-series identities (exact values in Q(zeta_N))
entry quantum-f1-f2      mode=quantum family=fam1_vs_fam2   k=1..2      roots=1,3,5 validity=odd_roots
entry quantum-f5-f3      mode=quantum family=fam5_vs_fam3   k=1..2 a=*  roots=1,3,5 validity=odd_roots
entry quantum-f5-hikami  mode=quantum family=fam5_vs_hikami k=1..2 a=*  roots=1,3,5 validity=odd_roots
)";
    return text;
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a_hex(const std::string& data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a(data);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, int col,
                             const std::string& what) {
    raise(Errc::catalog_parse_error,
          source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
}

struct RangeSpec {
    int lo = 0, hi = 0;
    bool all = false;
};

RangeSpec parse_range(const std::string& v, const std::string& source, int line, int col) {
    RangeSpec r;
    if (v == "*") {
        r.all = true;
        return r;
    }
    auto dots = v.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(v);
        } else {
            r.lo = std::stoi(v.substr(0, dots));
            r.hi = std::stoi(v.substr(dots + 2));
        }
    } catch (const std::exception&) {
        parse_fail(source, line, col, "bad integer range '" + v + "'");
    }
    if (r.hi < r.lo) parse_fail(source, line, col, "empty range '" + v + "'");
    return r;
}

} // namespace

Catalog parse_catalog(const std::string& text, const std::string& source_name) {
    Catalog cat;
    cat.digest = fnv1a_hex(text);
    cat.source = source_name;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        std::string body = (hash == std::string::npos) ? line : line.substr(0, hash);
        std::istringstream ls(body);
        std::vector<std::pair<std::string, int>> tokens; // token, column
        std::string tok;
        size_t pos = 0;
        while (ls >> tok) {
            size_t col = body.find(tok, pos);
            tokens.emplace_back(tok, static_cast<int>(col) + 1);
            pos = col + tok.size();
        }
        if (tokens.empty()) continue;
        if (tokens[0].first != "entry")
            parse_fail(source_name, lineno, tokens[0].second,
                       "expected 'entry', got '" + tokens[0].first + "'");
        if (tokens.size() < 2) parse_fail(source_name, lineno, 1, "entry needs a name");
        CatalogEntry e;
        e.line = lineno;
        e.name = tokens[1].first;
        for (size_t t = 2; t < tokens.size(); ++t) {
            const std::string& kv = tokens[t].first;
            int col = tokens[t].second;
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                parse_fail(source_name, lineno, col, "expected key=value, got '" + kv + "'");
            std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
            if (key == "mode") {
                if (val != "formal" && val != "pair" && val != "strange" && val != "quantum")
                    parse_fail(source_name, lineno, col, "unknown mode '" + val + "'");
                e.mode = val;
            } else if (key == "family") {
                e.family = val;
            } else if (key == "k") {
                RangeSpec r = parse_range(val, source_name, lineno, col);
                if (r.all) parse_fail(source_name, lineno, col, "k cannot be '*'");
                e.k_lo = r.lo;
                e.k_hi = r.hi;
                e.k_set = true;
            } else if (key == "a") {
                RangeSpec r = parse_range(val, source_name, lineno, col);
                e.a_all = r.all;
                e.a_lo = r.lo;
                e.a_hi = r.hi;
                e.a_set = true;
            } else if (key == "i") {
                RangeSpec r = parse_range(val, source_name, lineno, col);
                e.i_all = r.all;
                e.i_lo = r.lo;
                e.i_hi = r.hi;
                e.i_set = true;
            } else if (key == "order") {
                e.order = std::stoi(val);
            } else if (key == "nmax") {
                e.nmax = std::stoi(val);
            } else if (key == "torder") {
                e.torder = std::stoi(val);
            } else if (key == "roots") {
                std::istringstream rs(val);
                std::string piece;
                while (std::getline(rs, piece, ','))
                    try {
                        e.roots.push_back(std::stoi(piece));
                    } catch (const std::exception&) {
                        parse_fail(source_name, lineno, col, "bad root list '" + val + "'");
                    }
            } else if (key == "validity") {
                auto v = validity_from_name(val);
                if (!v) parse_fail(source_name, lineno, col, "unknown validity '" + val + "'");
                e.validity = *v;
            } else {
                parse_fail(source_name, lineno, col, "unknown key '" + key + "'");
            }
        }
        if (e.mode.empty()) parse_fail(source_name, lineno, 1, "entry is missing mode=");
        if (e.family.empty()) parse_fail(source_name, lineno, 1, "entry is missing family=");
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

Catalog load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::catalog_parse_error, path + ": cannot open catalog file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str(), path);
}

Catalog builtin_catalog() { return parse_catalog(default_catalog_text(), "<builtin>"); }

namespace {

// legal a-values for one job family at parameter k
std::pair<int, int> a_range_for(const std::string& mode, const std::string& family, int k) {
    if (mode == "quantum") return {0, k - 1};
    if (mode == "formal") {
        if (family == "ag_variant" || family == "family3_rr" || family == "family4_rr" ||
            family == "x_hikami" || family == "x_family3" || family == "x_family4")
            return {0, k - 1};
        return {0, 0};
    }
    auto f = family_from_name(family);
    if (f && family_uses_a(*f)) return family_a_range(*f, k);
    return {0, 0};
}

} // namespace

std::vector<Job> expand_entry(const CatalogEntry& e) {
    std::vector<Job> jobs;
    int k_lo = e.k_set ? e.k_lo : 1, k_hi = e.k_set ? e.k_hi : 1;
    for (int k = k_lo; k <= k_hi; ++k) {
        int a_lo = 0, a_hi = 0;
        if (e.a_set) {
            if (e.a_all) {
                auto [lo, hi] = a_range_for(e.mode, e.family, k);
                a_lo = lo;
                a_hi = hi;
            } else {
                a_lo = e.a_lo;
                a_hi = e.a_hi;
            }
        }
        int i_lo = 0, i_hi = 0;
        if (e.i_set) {
            if (e.i_all) {
                i_lo = 1;
                i_hi = k;
            } else {
                i_lo = e.i_lo;
                i_hi = e.i_hi;
            }
        }
        for (int a = a_lo; a <= a_hi; ++a) {
            for (int i = i_lo; i <= i_hi; ++i) {
                Job base;
                base.entry = e.name;
                base.mode = e.mode;
                base.family = e.family;
                base.k = k;
                base.a = a;
                base.i = i;
                base.order = e.order;
                base.nmax = e.nmax;
                base.torder = e.torder;
                base.validity = e.validity;
                if (e.roots.empty()) {
                    jobs.push_back(base);
                } else {
                    for (int root : e.roots) {
                        Job j = base;
                        j.root = root;
                        jobs.push_back(j);
                    }
                }
            }
        }
    }
    return jobs;
}

bool glob_match(const std::string& pattern, const std::string& text) {
    size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

} // namespace qstrange
