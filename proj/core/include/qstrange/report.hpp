#pragma once

#include <string>
#include <vector>

#include "qstrange/catalog.hpp"

namespace qstrange {

inline const char* engine_version() { return "0.1.0"; }

/// Outcome of one job. A fail always carries a witness with the exact
/// mismatching values; a pass never does. Timing is excluded from the
/// determinism contract.
struct RunReport {
    std::string entry;
    std::string mode;
    std::string family;
    int k = 0, a = 0, i = 0, root = 0;
    int order = 0, torder = 0, nmax = 0;
    std::string status; // pass | fail | root_rejected | error
    std::string witness_json; // empty unless fail/error/root_rejected detail exists
    double elapsed_ms = 0.0;
    bool cached = false;
    std::string version;
    std::string catalog_digest;
};

std::string emit_report_json(const std::vector<RunReport>& reports);
std::string emit_report_human(const std::vector<RunReport>& reports);

// serialization helpers shared with the cache
std::string report_to_json_string(const RunReport& r, bool with_timing);
RunReport report_from_json_string(const std::string& s);

std::string witness_from_mismatch(const QSeries::Mismatch& m);
std::string witness_from_pair(const PairCheckReport& rep);
std::string witness_from_strange(const StrangeReport& rep);
std::string cyc_to_json_string(const CycNum& v);

} // namespace qstrange
