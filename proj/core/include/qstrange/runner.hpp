#pragma once

#include "qstrange/report.hpp"

namespace qstrange {

struct RunOptions {
    std::string filter;    // glob on entry or family name; empty = everything
    int jobs = 1;          // worker threads
    std::string cache_dir; // empty = caching disabled
    int order_override = 0;
    int torder_override = 0;
};

// executes one concrete job (no cache involvement)
RunReport execute_job(const Job& job, const std::string& catalog_digest);

// expands, filters and executes a catalog; reports come back in catalog order
std::vector<RunReport> run_suite(const Catalog& catalog, const RunOptions& opts);

// exit code contract: 0 all pass, 1 verification failure, 2 usage/parse error
int suite_exit_code(const std::vector<RunReport>& reports);

} // namespace qstrange
