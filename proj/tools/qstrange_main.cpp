// Command-line front end: verify catalog identities, check Bailey pairs,
// evaluate strange and quantum identities at roots of unity, run suites.

#include <iostream>

#include <CLI11.hpp>

#include "qstrange/identities.hpp"
#include "qstrange/runner.hpp"

using namespace qstrange;

namespace {

Catalog load_catalog(const std::string& path) {
    if (path.empty()) return builtin_catalog();
    return load_catalog_file(path);
}

int finish(const std::vector<RunReport>& reports, const std::string& format) {
    if (format == "json")
        std::cout << emit_report_json(reports);
    else
        std::cout << emit_report_human(reports);
    return suite_exit_code(reports);
}

std::vector<RunReport> run_filtered(const Catalog& cat, const std::string& mode,
                                    const std::string& name_glob, int k, int a, int i, int root,
                                    int order, int torder) {
    std::vector<RunReport> reports;
    for (const auto& entry : cat.entries) {
        if (entry.mode != mode) continue;
        if (!name_glob.empty() && !glob_match(name_glob, entry.name) &&
            !glob_match(name_glob, entry.family))
            continue;
        for (Job job : expand_entry(entry)) {
            if (k > 0 && job.k != k) continue;
            if (a >= 0 && job.a != a) continue;
            if (i > 0 && job.i != i) continue;
            if (root > 0 && job.root != root) continue;
            if (order > 0) job.order = order;
            if (torder > 0) job.torder = torder;
            reports.push_back(execute_job(job, cat.digest));
        }
    }
    return reports;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Bailey-pair, strange and quantum q-series identities"};
    app.require_subcommand(1);
    std::string catalog_path, format = "human";

    // verify: formal identities from the catalog
    auto* verify = app.add_subcommand("verify", "verify formal power series identities");
    std::string v_name = "*";
    int v_k = 0, v_a = -1, v_i = 0, v_order = 0;
    verify->add_option("--name", v_name, "entry or identity glob");
    verify->add_option("--k", v_k, "restrict to one k");
    verify->add_option("--a", v_a, "restrict to one a");
    verify->add_option("--i", v_i, "restrict to one i");
    verify->add_option("--order", v_order, "override truncation order");
    verify->add_option("--catalog", catalog_path, "catalog file (defaults to the builtin)");
    verify->add_option("--format", format, "human or json");

    // pair: Bailey pair verification
    auto* pair = app.add_subcommand("pair", "verify a Bailey pair against its defining relation");
    std::string p_family;
    int p_k = 1, p_a = 0, p_nmax = 4, p_order = 25;
    pair->add_option("--family", p_family, "pair family or base pair name")->required();
    pair->add_option("--k", p_k, "depth parameter k");
    pair->add_option("--a", p_a, "shift parameter a");
    pair->add_option("--n-max", p_nmax, "largest index checked");
    pair->add_option("--order", p_order, "truncation order");
    pair->add_option("--format", format, "human or json");

    // strange: asymptotic t-expansions at a root of unity
    auto* strange = app.add_subcommand("strange", "check a strange identity at a root of unity");
    std::string s_name;
    int s_k = 1, s_a = 0, s_root = 1, s_torder = 4;
    strange->add_option("--name", s_name, "family name glob (zagier, hikami, family1..family5)")
        ->required();
    strange->add_option("--k", s_k, "depth parameter k");
    strange->add_option("--a", s_a, "shift parameter a");
    strange->add_option("--root", s_root, "root of unity order N")->required();
    strange->add_option("--t-order", s_torder, "t-expansion order");
    strange->add_option("--format", format, "human or json");

    // quantum: exact equality in Q(zeta_N)
    auto* quantum = app.add_subcommand("quantum", "check a quantum q-series identity");
    std::string q_id;
    int q_k = 1, q_a = 0, q_root = 1;
    quantum->add_option("--id", q_id, "fam1_vs_fam2 | fam5_vs_fam3 | fam5_vs_hikami")->required();
    quantum->add_option("--k", q_k, "depth parameter k");
    quantum->add_option("--a", q_a, "shift parameter a");
    quantum->add_option("--root", q_root, "odd root of unity order N")->required();
    quantum->add_option("--format", format, "human or json");

    // suite: the whole catalog
    auto* suite = app.add_subcommand("suite", "run a verification catalog");
    std::string su_filter;
    int su_jobs = 1, su_order = 0, su_torder = 0;
    std::string su_cache;
    suite->add_option("--catalog", catalog_path, "catalog file (defaults to the builtin)");
    suite->add_option("--filter", su_filter, "glob on entry or family names");
    suite->add_option("--format", format, "human or json");
    suite->add_option("--jobs", su_jobs, "worker threads");
    suite->add_option("--order", su_order, "override q-truncation orders");
    suite->add_option("--t-order", su_torder, "override t-expansion orders");
    suite->add_option("--cache-dir", su_cache, "result cache directory");

    // list: catalog contents
    auto* list = app.add_subcommand("list", "list catalog entries");
    std::string l_validity;
    list->add_option("--catalog", catalog_path, "catalog file (defaults to the builtin)");
    list->add_option("--validity", l_validity, "filter by validity tag");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            Catalog cat = load_catalog(catalog_path);
            return finish(run_filtered(cat, "formal", v_name, v_k, v_a, v_i, 0, v_order, 0),
                          format);
        }
        if (pair->parsed()) {
            Job job;
            job.entry = "cli-pair";
            job.mode = "pair";
            job.family = p_family;
            job.k = p_k;
            job.a = p_a;
            job.nmax = p_nmax;
            job.order = p_order;
            return finish({execute_job(job, "<cli>")}, format);
        }
        if (strange->parsed()) {
            Catalog cat = builtin_catalog();
            std::vector<RunReport> reports;
            for (Family f : {Family::Zagier, Family::Hikami, Family::Family1, Family::Family2,
                             Family::Family3, Family::Family4, Family::Family5}) {
                if (!glob_match(s_name, family_name(f))) continue;
                Job job;
                job.entry = "cli-strange";
                job.mode = "strange";
                job.family = family_name(f);
                job.k = (f == Family::Zagier) ? 1 : s_k;
                job.a = s_a;
                job.root = s_root;
                job.torder = s_torder;
                reports.push_back(execute_job(job, "<cli>"));
            }
            if (reports.empty()) {
                std::cerr << "no strange family matches '" << s_name << "'\n";
                return 2;
            }
            return finish(reports, format);
        }
        if (quantum->parsed()) {
            Job job;
            job.entry = "cli-quantum";
            job.mode = "quantum";
            job.family = q_id;
            job.k = q_k;
            job.a = q_a;
            job.root = q_root;
            return finish({execute_job(job, "<cli>")}, format);
        }
        if (suite->parsed()) {
            Catalog cat = load_catalog(catalog_path);
            RunOptions opts;
            opts.filter = su_filter;
            opts.jobs = su_jobs;
            opts.cache_dir = su_cache;
            opts.order_override = su_order;
            opts.torder_override = su_torder;
            return finish(run_suite(cat, opts), format);
        }
        if (list->parsed()) {
            Catalog cat = load_catalog(catalog_path);
            for (const auto& e : cat.entries) {
                if (!l_validity.empty() && l_validity != validity_name(e.validity)) continue;
                std::cout << e.name << " mode=" << e.mode << " family=" << e.family;
                if (e.k_set) std::cout << " k=" << e.k_lo << ".." << e.k_hi;
                if (e.a_set) {
                    if (e.a_all) std::cout << " a=*";
                    else std::cout << " a=" << e.a_lo << ".." << e.a_hi;
                }
                if (e.i_set) {
                    if (e.i_all) std::cout << " i=*";
                    else std::cout << " i=" << e.i_lo << ".." << e.i_hi;
                }
                if (e.order) std::cout << " order=" << e.order;
                if (e.torder) std::cout << " torder=" << e.torder;
                if (!e.roots.empty()) {
                    std::cout << " roots=";
                    for (size_t r = 0; r < e.roots.size(); ++r)
                        std::cout << (r ? "," : "") << e.roots[r];
                }
                std::cout << " validity=" << validity_name(e.validity) << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return (e.code() == Errc::catalog_parse_error || e.code() == Errc::usage_error ||
                e.code() == Errc::bad_params)
                   ? 2
                   : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
