#include "qstrange/runner.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "qstrange/identities.hpp"

namespace qstrange {

namespace {

RunReport skeleton(const Job& job, const std::string& digest) {
    RunReport r;
    r.entry = job.entry;
    r.mode = job.mode;
    r.family = job.family;
    r.k = job.k;
    r.a = job.a;
    r.i = job.i;
    r.root = job.root;
    r.order = job.order;
    r.torder = job.torder;
    r.nmax = job.nmax;
    r.version = engine_version();
    r.catalog_digest = digest;
    return r;
}

void run_formal(const Job& job, RunReport& rep) {
    int a_or_i = (job.i > 0) ? job.i : job.a;
    IdentityCheck chk = verify_identity(job.family, job.k, a_or_i, job.order);
    if (chk.ok) {
        rep.status = "pass";
    } else {
        rep.status = "fail";
        rep.witness_json = witness_from_mismatch(*chk.mismatch);
    }
}

void run_pair(const Job& job, RunReport& rep) {
    if (auto base = base_pair_from_name(job.family)) {
        PairCheckReport chk = verify_pair(base_pair(*base), job.nmax, job.order);
        rep.status = chk.ok ? "pass" : "fail";
        if (!chk.ok) rep.witness_json = witness_from_pair(chk);
        return;
    }
    auto fam = family_from_name(job.family);
    if (!fam) raise(Errc::bad_params, "unknown pair family '" + job.family + "'");
    BaileyPair pair = build_family_pair(*fam, job.k, job.a);
    PairCheckReport chk = verify_pair(pair, job.nmax, job.order);
    if (!chk.ok) {
        rep.status = "fail";
        rep.witness_json = witness_from_pair(chk);
        return;
    }
    // closed multisum beta must agree with the iterated beta
    for (int n = 0; n <= job.nmax; ++n) {
        QSeries closed = closed_beta(*fam, job.k, job.a, n, job.order);
        auto mism = QSeries::first_mismatch(closed, pair.beta.at(n, job.order), job.order);
        if (mism) {
            rep.status = "fail";
            PairCheckReport c{false, n, mism};
            rep.witness_json = witness_from_pair(c);
            return;
        }
    }
    rep.status = "pass";
}

void run_strange(const Job& job, RunReport& rep) {
    auto fam = family_from_name(job.family);
    if (!fam) raise(Errc::bad_params, "unknown strange family '" + job.family + "'");
    StrangeReport chk = strange_check(*fam, job.k, job.a, job.root, job.torder);
    rep.status = root_status_name(chk.status);
    if (chk.status != RootStatus::Pass) rep.witness_json = witness_from_strange(chk);
}

void run_quantum(const Job& job, RunReport& rep) {
    auto id = quantum_id_from_name(job.family);
    if (!id) raise(Errc::bad_params, "unknown quantum identity '" + job.family + "'");
    StrangeReport chk = quantum_check(*id, job.k, job.a, job.root);
    rep.status = root_status_name(chk.status);
    if (chk.status != RootStatus::Pass) rep.witness_json = witness_from_strange(chk);
}

std::string job_cache_key(const Job& job, const std::string& digest) {
    std::string key = digest + "|" + std::string(engine_version()) + "|" + job.entry + "|" +
                      job.mode + "|" + job.family + "|" + std::to_string(job.k) + "," +
                      std::to_string(job.a) + "," + std::to_string(job.i) + "," +
                      std::to_string(job.root) + "|" + std::to_string(job.order) + "," +
                      std::to_string(job.nmax) + "," + std::to_string(job.torder);
    return fnv1a_hex(key);
}

} // namespace

RunReport execute_job(const Job& job, const std::string& catalog_digest) {
    RunReport rep = skeleton(job, catalog_digest);
    auto start = std::chrono::steady_clock::now();
    try {
        if (job.mode == "formal")
            run_formal(job, rep);
        else if (job.mode == "pair")
            run_pair(job, rep);
        else if (job.mode == "strange")
            run_strange(job, rep);
        else if (job.mode == "quantum")
            run_quantum(job, rep);
        else
            raise(Errc::bad_params, "unknown mode '" + job.mode + "'");
    } catch (const Error& e) {
        rep.status = "error";
        rep.witness_json = std::string("{\"error\":\"") + errc_name(e.code()) + "\"}";
    } catch (const std::exception& e) {
        rep.status = "error";
        rep.witness_json = "{\"error\":\"internal\"}";
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

std::vector<RunReport> run_suite(const Catalog& catalog, const RunOptions& opts) {
    std::vector<Job> jobs;
    for (const auto& entry : catalog.entries) {
        if (!opts.filter.empty() && !glob_match(opts.filter, entry.name) &&
            !glob_match(opts.filter, entry.family))
            continue;
        auto expanded = expand_entry(entry);
        for (auto& j : expanded) {
            if (opts.order_override > 0 && (j.mode == "formal" || j.mode == "pair"))
                j.order = opts.order_override;
            if (opts.torder_override > 0 && j.mode == "strange") j.torder = opts.torder_override;
            jobs.push_back(std::move(j));
        }
    }

    std::vector<RunReport> reports(jobs.size());
    bool use_cache = !opts.cache_dir.empty();
    if (use_cache) std::filesystem::create_directories(opts.cache_dir);

    auto run_one = [&](size_t idx) {
        const Job& job = jobs[idx];
        std::string key;
        if (use_cache) {
            key = job_cache_key(job, catalog.digest);
            std::ifstream in(opts.cache_dir + "/" + key + ".json");
            if (in) {
                std::ostringstream ss;
                ss << in.rdbuf();
                try {
                    RunReport cached = report_from_json_string(ss.str());
                    cached.cached = true;
                    reports[idx] = std::move(cached);
                    return;
                } catch (const std::exception&) {
                    // unreadable cache entry: recompute
                }
            }
        }
        RunReport rep = execute_job(job, catalog.digest);
        if (use_cache && rep.status != "error") {
            std::ofstream out(opts.cache_dir + "/" + key + ".json");
            out << report_to_json_string(rep, false);
        }
        reports[idx] = std::move(rep);
    };

    int workers = std::max(1, opts.jobs);
    if (workers == 1) {
        for (size_t idx = 0; idx < jobs.size(); ++idx) run_one(idx);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t idx = next.fetch_add(1); idx < jobs.size(); idx = next.fetch_add(1))
                    run_one(idx);
            });
        for (auto& th : pool) th.join();
    }
    return reports;
}

int suite_exit_code(const std::vector<RunReport>& reports) {
    for (const auto& r : reports)
        if (r.status == "fail" || r.status == "error") return 1;
    return 0;
}

} // namespace qstrange
