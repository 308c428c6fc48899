#include "qrec/verify.hpp"

#include <chrono>
#include <stdexcept>

#include "json.hpp"
#include "verify_detail.hpp"

namespace qrec {

namespace detail {

std::vector<Band> envelope_bands(double t_hi, double lam, double cap_max) {
    const double b1 = lam / cap_max;
    std::vector<Band> bands{{0.0, b1, cap_max}};
    const auto tail = hyperbolic_bands(b1, t_hi, lam, cap_max, 0.25);
    bands.insert(bands.end(), tail.begin(), tail.end());
    return bands;
}

}  // namespace detail

const std::vector<std::string>& scenario_ids() {
    static const std::vector<std::string> ids = {"V1", "V2", "V3", "V4", "V5",
                                                 "V6", "V7", "V8", "V9", "V10"};
    return ids;
}

std::int64_t default_replicas(const std::string& id) {
    if (id == "V1") return 2000;
    if (id == "V2") return 1500;
    if (id == "V3") return 2000;
    if (id == "V4") return 10000;
    if (id == "V5") return 30000;
    if (id == "V6") return 2500;
    if (id == "V7") return 1500;
    if (id == "V8") return 10000;
    if (id == "V9") return 80000;
    if (id == "V10") return 22000;
    throw std::invalid_argument("unknown scenario id: " + id);
}

ScenarioReport run_scenario(const std::string& id, const RunConfig& cfg) {
    const std::int64_t replicas = cfg.replicas > 0 ? cfg.replicas : default_replicas(id);
    ScenarioReport rep;
    rep.scenario_id = id;
    rep.k = cfg.k;
    rep.seed = cfg.seed;
    rep.replicas = replicas;

    const auto start = std::chrono::steady_clock::now();
    if (id == "V1") detail::run_v1(cfg, replicas, rep);
    else if (id == "V2") detail::run_v2(cfg, replicas, rep);
    else if (id == "V3") detail::run_v3(cfg, replicas, rep);
    else if (id == "V4") detail::run_v4(cfg, replicas, rep);
    else if (id == "V5") detail::run_v5(cfg, replicas, rep);
    else if (id == "V6") detail::run_v6(cfg, replicas, rep);
    else if (id == "V7") detail::run_v7(cfg, replicas, rep);
    else if (id == "V8") detail::run_v8(cfg, replicas, rep);
    else if (id == "V9") detail::run_v9(cfg, replicas, rep);
    else if (id == "V10") detail::run_v10(cfg, replicas, rep);
    else throw std::invalid_argument("unknown scenario id: " + id);
    const auto end = std::chrono::steady_clock::now();

    rep.runtime_ms = std::chrono::duration<double, std::milli>(end - start).count();
    rep.passed = true;
    for (const auto& t : rep.tests) rep.passed = rep.passed && t.passed;
    return rep;
}

std::string report_to_json(const ScenarioReport& report, bool include_runtime) {
    nlohmann::ordered_json j;
    j["scenario_id"] = report.scenario_id;
    j["k"] = report.k;
    j["seed"] = report.seed;
    j["replicas"] = report.replicas;
    j["algorithm_version"] = kAlgorithmVersion;
    j["tests"] = nlohmann::ordered_json::array();
    for (const auto& t : report.tests) {
        nlohmann::ordered_json jt;
        jt["name"] = t.name;
        jt["statistic"] = t.statistic;
        jt["threshold"] = t.threshold;
        jt["n"] = t.n;
        jt["passed"] = t.passed;
        jt["detail"] = t.detail;
        j["tests"].push_back(jt);
    }
    j["passed"] = report.passed;
    j["notes"] = report.notes;
    if (include_runtime) j["runtime_ms"] = report.runtime_ms;
    return j.dump(2) + "\n";
}

}  // namespace qrec
