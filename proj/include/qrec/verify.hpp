#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrec/runconfig.hpp"
#include "qrec/stats.hpp"

namespace qrec {

struct ScenarioReport {
    std::string scenario_id;
    std::int64_t k = 0;
    std::uint64_t seed = 0;
    std::int64_t replicas = 0;
    std::vector<TestResult> tests;
    bool passed = false;
    std::vector<std::string> notes;
    double runtime_ms = 0.0;
};

// The ten scenario ids, "V1" through "V10".
const std::vector<std::string>& scenario_ids();

std::int64_t default_replicas(const std::string& id);

// Runs one scenario with cfg.replicas (or the default when 0) replicas.
// Throws std::invalid_argument for unknown ids or unusable parameters.
ScenarioReport run_scenario(const std::string& id, const RunConfig& cfg);

// Serialized report; runtime_ms can be left out so reruns compare
// byte-for-byte.
std::string report_to_json(const ScenarioReport& report, bool include_runtime = true);

}  // namespace qrec
