#include "qstrange/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace qstrange {

using nlohmann::json;

namespace {

json cyc_to_json(const CycNum& v) {
    json coords = json::array();
    for (const auto& c : v.coords()) coords.push_back(to_string(c));
    return json{{"order", v.order()}, {"coords", coords}};
}

json report_to_json(const RunReport& r, bool with_timing) {
    json j;
    j["entry"] = r.entry;
    j["mode"] = r.mode;
    j["family"] = r.family;
    json params;
    if (r.k > 0 || r.mode != "formal") params["k"] = r.k;
    if (r.a >= 0) params["a"] = r.a;
    if (r.i > 0) params["i"] = r.i;
    if (r.root > 0) params["root"] = r.root;
    j["params"] = params;
    if (r.order > 0) j["order"] = r.order;
    if (r.torder > 0 || r.mode == "quantum") j["t_order"] = r.torder;
    if (r.nmax > 0) j["n_max"] = r.nmax;
    j["status"] = r.status;
    if (!r.witness_json.empty()) j["witness"] = json::parse(r.witness_json);
    if (with_timing) {
        j["elapsed_ms"] = r.elapsed_ms;
        j["cached"] = r.cached;
    }
    j["engine_version"] = r.version;
    j["catalog_digest"] = r.catalog_digest;
    return j;
}

} // namespace

std::string cyc_to_json_string(const CycNum& v) { return cyc_to_json(v).dump(); }

std::string witness_from_mismatch(const QSeries::Mismatch& m) {
    json j;
    j["q_degree"] = m.q_deg;
    j["x_degree"] = m.x_deg;
    j["lhs"] = to_string(m.lhs);
    j["rhs"] = to_string(m.rhs);
    return j.dump();
}

std::string witness_from_pair(const PairCheckReport& rep) {
    json j;
    j["n"] = rep.fail_n;
    if (rep.mismatch) {
        j["q_degree"] = rep.mismatch->q_deg;
        j["x_degree"] = rep.mismatch->x_deg;
        j["lhs"] = to_string(rep.mismatch->lhs);
        j["rhs"] = to_string(rep.mismatch->rhs);
    }
    return j.dump();
}

std::string witness_from_strange(const StrangeReport& rep) {
    json j;
    if (rep.status == RootStatus::Rejected) {
        j["reason"] = rep.message;
        return j.dump();
    }
    if (rep.first_bad_t >= 0) j["t_degree"] = rep.first_bad_t;
    json lc = json::array(), rc = json::array();
    for (const auto& c : rep.lhs_coeffs) lc.push_back(cyc_to_json(c));
    for (const auto& c : rep.rhs_coeffs) rc.push_back(cyc_to_json(c));
    j["lhs_coeffs"] = lc;
    j["rhs_coeffs"] = rc;
    return j.dump();
}

std::string report_to_json_string(const RunReport& r, bool with_timing) {
    return report_to_json(r, with_timing).dump();
}

RunReport report_from_json_string(const std::string& s) {
    json j = json::parse(s);
    RunReport r;
    r.entry = j.value("entry", "");
    r.mode = j.value("mode", "");
    r.family = j.value("family", "");
    if (j.contains("params")) {
        r.k = j["params"].value("k", 0);
        r.a = j["params"].value("a", 0);
        r.i = j["params"].value("i", 0);
        r.root = j["params"].value("root", 0);
    }
    r.order = j.value("order", 0);
    r.torder = j.value("t_order", 0);
    r.nmax = j.value("n_max", 0);
    r.status = j.value("status", "error");
    if (j.contains("witness")) r.witness_json = j["witness"].dump();
    r.version = j.value("engine_version", "");
    r.catalog_digest = j.value("catalog_digest", "");
    return r;
}

std::string emit_report_json(const std::vector<RunReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r, true));
    return arr.dump(2) + "\n";
}

namespace {

std::string param_string(const RunReport& r) {
    std::ostringstream os;
    bool first = true;
    auto put = [&](const char* name, int v) {
        if (!first) os << " ";
        os << name << "=" << v;
        first = false;
    };
    if (r.k > 0) put("k", r.k);
    if (r.a > 0) put("a", r.a);
    if (r.i > 0) put("i", r.i);
    if (r.root > 0) put("N", r.root);
    return os.str();
}

} // namespace

std::string emit_report_human(const std::vector<RunReport>& reports) {
    std::ostringstream os;
    os << std::left << std::setw(14) << "STATUS" << std::setw(26) << "ENTRY" << std::setw(20)
       << "FAMILY" << std::setw(18) << "PARAMS" << std::setw(8) << "ORDER" << "TIME\n";
    int pass = 0, fail = 0, rejected = 0, error = 0;
    for (const auto& r : reports) {
        if (r.status == "pass") ++pass;
        else if (r.status == "fail") ++fail;
        else if (r.status == "root_rejected") ++rejected;
        else ++error;
        std::ostringstream t;
        if (r.cached)
            t << "cached";
        else
            t << std::fixed << std::setprecision(1) << r.elapsed_ms << "ms";
        int order = (r.mode == "strange" || r.mode == "quantum") ? r.torder : r.order;
        os << std::left << std::setw(14) << r.status << std::setw(26) << r.entry << std::setw(20)
           << r.family << std::setw(18) << param_string(r) << std::setw(8) << order << t.str()
           << "\n";
        if (r.status == "fail" && !r.witness_json.empty())
            os << "    witness: " << r.witness_json << "\n";
    }
    os << pass << " passed, " << fail << " failed, " << rejected << " root-rejected, " << error
       << " errored\n";
    return os.str();
}

} // namespace qstrange
