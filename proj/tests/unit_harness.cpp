#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qstrange/runner.hpp"

using namespace qstrange;

TEST_CASE("the builtin catalog parses") {
    Catalog cat = builtin_catalog();
    CHECK(cat.entries.size() >= 30);
    CHECK(cat.digest == fnv1a_hex(default_catalog_text()));
    CHECK(cat.source == "<builtin>");
    // every entry expands to at least one job
    for (const auto& e : cat.entries) CHECK(!expand_entry(e).empty());
}

TEST_CASE("the shipped catalog file matches the builtin text") {
    std::ifstream in(std::string(QSTRANGE_SOURCE_DIR) + "/data/catalog.qs");
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == default_catalog_text());
}

TEST_CASE("parse errors carry the location") {
    CHECK_THROWS_AS(parse_catalog("entry x mode=bogus family=y\n", "test.qs"), Error);
    try {
        parse_catalog("# fine\nentry x mode=strange family=zagier validity=nope\n", "test.qs");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::catalog_parse_error);
        CHECK(std::string(e.what()).find("test.qs:2:") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_catalog("notentry a\n", "t"), Error);
    CHECK_THROWS_AS(parse_catalog("entry a mode=formal\n", "t"), Error); // missing family
    CHECK_THROWS_AS(parse_catalog("entry a mode=formal family=f k=3..1\n", "t"), Error);
}

TEST_CASE("entry expansion") {
    Catalog cat = parse_catalog(
        "entry e1 mode=strange family=hikami k=2..3 a=* roots=1,3 torder=2 validity=all_roots\n",
        "t");
    auto jobs = expand_entry(cat.entries[0]);
    // k=2: a in {0,1}; k=3: a in {0,1,2}; two roots each
    CHECK(jobs.size() == (2 + 3) * 2);
    CHECK(jobs[0].k == 2);
    CHECK(jobs[0].a == 0);
    CHECK(jobs[0].root == 1);
    CHECK(jobs.back().k == 3);
    CHECK(jobs.back().a == 2);
    CHECK(jobs.back().root == 3);

    Catalog cat2 = parse_catalog("entry e2 mode=formal family=andrews_gordon k=2..3 i=* order=9\n",
                                 "t");
    auto jobs2 = expand_entry(cat2.entries[0]);
    CHECK(jobs2.size() == 2 + 3);
}

TEST_CASE("glob matching") {
    CHECK(glob_match("*", "anything"));
    CHECK(glob_match("zagier*", "zagier-strange"));
    CHECK(glob_match("*strange*", "hikami-strange"));
    CHECK(glob_match("a?c", "abc"));
    CHECK(!glob_match("a?c", "ac"));
    CHECK(!glob_match("zagier", "hikami"));
}

TEST_CASE("suite runs, filters and exit codes") {
    std::string text =
        "entry fast-ag mode=formal family=andrews_gordon k=2 i=1..2 order=10 validity=formal\n"
        "entry fast-pair mode=pair family=base_zagier nmax=3 order=10 validity=formal\n"
        "entry fast-strange mode=strange family=zagier k=1 roots=1,2 torder=1 validity=all_roots\n"
        "entry fast-quantum mode=quantum family=fam1_vs_fam2 k=1 roots=1,2 validity=odd_roots\n";
    Catalog cat = parse_catalog(text, "fast.qs");
    RunOptions opts;
    auto reports = run_suite(cat, opts);
    REQUIRE(reports.size() == 2 + 1 + 2 + 2);
    int rejected = 0;
    for (const auto& r : reports) {
        if (r.status == "root_rejected") ++rejected;
        else CHECK(r.status == "pass");
        CHECK(r.catalog_digest == cat.digest);
        CHECK(r.version == std::string(engine_version()));
    }
    CHECK(rejected == 1); // the quantum check at the even root
    CHECK(suite_exit_code(reports) == 0);

    // a filter that selects nothing is an empty, successful run
    RunOptions none;
    none.filter = "no-such-entry";
    auto empty = run_suite(cat, none);
    CHECK(empty.empty());
    CHECK(suite_exit_code(empty) == 0);

    // filters match entry or family names
    RunOptions only_pair;
    only_pair.filter = "base_*";
    CHECK(run_suite(cat, only_pair).size() == 1);
}

TEST_CASE("parallel runs preserve catalog order and results") {
    std::string text =
        "entry a mode=formal family=qbinom_gen k=0..4 order=12 validity=formal\n"
        "entry b mode=strange family=zagier k=1 roots=1,2,3 torder=2 validity=all_roots\n";
    Catalog cat = parse_catalog(text, "par.qs");
    RunOptions serial, parallel;
    parallel.jobs = 4;
    auto r1 = run_suite(cat, serial);
    auto r2 = run_suite(cat, parallel);
    REQUIRE(r1.size() == r2.size());
    for (size_t i = 0; i < r1.size(); ++i) {
        CHECK(report_to_json_string(r1[i], false) == report_to_json_string(r2[i], false));
    }
}

TEST_CASE("machine reports are deterministic") {
    std::string text =
        "entry d mode=strange family=zagier k=1 roots=2 torder=2 validity=all_roots\n";
    Catalog cat = parse_catalog(text, "det.qs");
    RunOptions opts;
    auto a = run_suite(cat, opts);
    auto b = run_suite(cat, opts);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
        CHECK(report_to_json_string(a[i], false) == report_to_json_string(b[i], false));
}

TEST_CASE("the cache never changes a status") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "qstrange-cache-test";
    fs::remove_all(dir);
    std::string text =
        "entry c mode=formal family=qbinom_gen k=0..3 order=12 validity=formal\n";
    Catalog cat = parse_catalog(text, "cache.qs");
    RunOptions opts;
    opts.cache_dir = dir.string();
    auto fresh = run_suite(cat, opts);
    auto cached = run_suite(cat, opts);
    REQUIRE(fresh.size() == cached.size());
    for (size_t i = 0; i < fresh.size(); ++i) {
        CHECK(!fresh[i].cached);
        CHECK(cached[i].cached);
        CHECK(report_to_json_string(fresh[i], false) == report_to_json_string(cached[i], false));
    }
    fs::remove_all(dir);
}

TEST_CASE("failure witnesses carry exact values") {
    // corrupt a pair and check the serialized witness
    BaileyPair z = base_pair(BasePair::Zagier);
    PairSeq bad([inner = z.beta](int n, int order) {
        QSeries b = inner.at(n, order);
        if (n == 1) b += QSeries::term(Rational(1), 0, 1, order);
        return b;
    });
    BaileyPair corrupted{z.rel_param, z.base, z.alpha, bad, "corrupted"};
    auto rep = verify_pair(corrupted, 2, 10);
    REQUIRE(!rep.ok);
    std::string witness = witness_from_pair(rep);
    CHECK(witness.find("\"n\":1") != std::string::npos);
    CHECK(witness.find("q_degree") != std::string::npos);

    RunReport rr;
    rr.entry = "synthetic";
    rr.mode = "pair";
    rr.family = "base_zagier";
    rr.status = "fail";
    rr.witness_json = witness;
    rr.version = engine_version();
    rr.catalog_digest = "0";
    std::string human = emit_report_human({rr});
    CHECK(human.find("fail") != std::string::npos);
    CHECK(human.find("witness") != std::string::npos);
    std::string json = emit_report_json({rr});
    CHECK(json.find("\"witness\"") != std::string::npos);
    CHECK(suite_exit_code({rr}) == 1);
}

TEST_CASE("json report schema") {
    std::string text =
        "entry s mode=strange family=zagier k=1 roots=2 torder=1 validity=all_roots\n";
    Catalog cat = parse_catalog(text, "schema.qs");
    auto reports = run_suite(cat, RunOptions{});
    std::string json = emit_report_json(reports);
    CHECK(json.find("\"entry\"") != std::string::npos);
    CHECK(json.find("\"status\"") != std::string::npos);
    CHECK(json.find("\"catalog_digest\"") != std::string::npos);
    CHECK(json.find("\"engine_version\"") != std::string::npos);
    // round-trip through the serialized form
    RunReport back = report_from_json_string(report_to_json_string(reports[0], false));
    CHECK(back.entry == reports[0].entry);
    CHECK(back.status == reports[0].status);
    CHECK(back.root == reports[0].root);
}

TEST_CASE("cyclotomic witnesses serialize as coordinate vectors") {
    CycNum v = CycNum::zeta_pow(3, 1).scaled(Rational(-1, 2)) + CycNum::one(3);
    std::string s = cyc_to_json_string(v);
    CHECK(s.find("\"order\":3") != std::string::npos);
    CHECK(s.find("-1/2") != std::string::npos);
    // a failing strange report carries both coefficient vectors
    StrangeReport rep;
    rep.status = RootStatus::Fail;
    rep.first_bad_t = 1;
    rep.lhs_coeffs = {CycNum::one(3), v};
    rep.rhs_coeffs = {CycNum::one(3), CycNum::zero(3)};
    std::string w = witness_from_strange(rep);
    CHECK(w.find("lhs_coeffs") != std::string::npos);
    CHECK(w.find("rhs_coeffs") != std::string::npos);
    CHECK(w.find("\"t_degree\":1") != std::string::npos);
}
