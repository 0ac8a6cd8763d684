#include "zsum/json_io.hpp"

#include "zsum/errors.hpp"

namespace zsum {

using nlohmann::json;

json weighting_to_json(const SignedWeighting& w) {
    json j;
    j["n"] = w.n();
    j["r"] = w.range();
    json arr = json::array();
    for (int8_t x : w.weights()) arr.push_back(static_cast<int>(x));
    j["weights"] = std::move(arr);
    return j;
}

SignedWeighting weighting_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("weights"))
        throw Error("weighting JSON needs fields n, r, weights");
    if (!j["n"].is_number_integer() || !j["r"].is_number_integer() || !j["weights"].is_array())
        throw Error("weighting JSON has wrongly typed fields");
    int n = j["n"].get<int>();
    int r = j["r"].get<int>();
    std::vector<int8_t> weights;
    weights.reserve(j["weights"].size());
    for (const auto& x : j["weights"]) {
        if (!x.is_number_integer()) throw Error("weights must be integers");
        long long v = x.get<long long>();
        if (v < -2 || v > 2) throw Error("weight outside supported ranges");
        weights.push_back(static_cast<int8_t>(v));
    }
    return SignedWeighting::from_weights(n, r, std::move(weights));
}

json certificate_to_json(const Certificate& c) {
    json j;
    j["context"] = c.context;
    j["kind"] = c.kind == CertificateKind::ZeroSumWitness ? "ZERO_SUM_WITNESS" : "NONE_EXISTS";
    j["m"] = c.m;
    if (c.kind == CertificateKind::ZeroSumWitness)
        j["witness"] = c.witness;
    else
        j["witness"] = nullptr;
    return j;
}

namespace {

const char* statement_name(AuditStatement s) {
    switch (s) {
        case AuditStatement::ThresholdK4: return "THRESHOLD_K4";
        case AuditStatement::ExtremalK4: return "EXTREMAL_K4";
        case AuditStatement::BalancedNoZsKm: return "BALANCED_NO_ZS_KM";
        case AuditStatement::S1S2Scan: return "S1S2_SCAN";
    }
    return "UNKNOWN";
}

} // namespace

json report_to_json(const AuditReport& r) {
    json j;
    j["statement"] = statement_name(r.statement);
    if (r.statement == AuditStatement::S1S2Scan) {
        j["limit"] = r.limit.get_str();
        json members = json::array();
        for (const auto& m : r.intersection) members.push_back(m.get_str());
        j["intersection"] = std::move(members);
    } else {
        j["n"] = r.n;
    }
    if (r.statement == AuditStatement::BalancedNoZsKm) j["budget_exceeded"] = r.budget_exceeded;
    j["total_scanned"] = r.total_scanned;
    j["violation_count"] = r.violation_count;
    json viols = json::array();
    for (const auto& w : r.violations) viols.push_back(weighting_to_json(w));
    j["violations"] = std::move(viols);
    j["statistics"] = r.statistics;
    return j;
}

json pell_solutions_to_json(const std::vector<pell::PellSolution>& sols) {
    json j;
    j["family"] = sols.empty() || sols.front().family == pell::Family::NegPell ? "neg-pell" : "bal-clique";
    json arr = json::array();
    for (const auto& s : sols) {
        json e;
        e["k"] = s.k;
        e["x"] = s.x.get_str();
        e["y"] = s.y.get_str();
        arr.push_back(std::move(e));
    }
    j["solutions"] = std::move(arr);
    return j;
}

} // namespace zsum
