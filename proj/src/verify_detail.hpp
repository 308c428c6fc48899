#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrec/pointset.hpp"
#include "qrec/rng.hpp"
#include "qrec/runconfig.hpp"
#include "qrec/verify.hpp"

namespace qrec::detail {

// Prefix band (0, lam/cap_max] at cap_max followed by log-spaced bands whose
// caps track min(cap_max, lam/t). Caps never increase in t, so every atom in
// the sample has its full southwest region inside the window and all computed
// ranks are exact; the only corruption is a true low record escaping above
// the t*x <= lam envelope, with probability like a far Gamma tail.
std::vector<Band> envelope_bands(double t_hi, double lam, double cap_max);

// Per-replica generator stream within a lane.
inline RngStream replica_stream(const RngStream& lane, std::int64_t r) {
    return lane.substream(static_cast<std::uint64_t>(r));
}

void run_v1(const RunConfig& cfg, std::int64_t replicas, ScenarioReport& rep);
void run_v2(const RunConfig& cfg, std::int64_t replicas, ScenarioReport& rep);
void run_v3(const RunConfig& cfg, std::int64_t replicas, ScenarioReport& rep);
void run_v4(const RunConfig& cfg, std::int64_t replicas, ScenarioReport& rep);
void run_v5(const RunConfig& cfg, std::int64_t replicas, ScenarioReport& rep);
void run_v6(const RunConfig& cfg, std::int64_t replicas, ScenarioReport& rep);
void run_v7(const RunConfig& cfg, std::int64_t replicas, ScenarioReport& rep);
void run_v8(const RunConfig& cfg, std::int64_t replicas, ScenarioReport& rep);
void run_v9(const RunConfig& cfg, std::int64_t replicas, ScenarioReport& rep);
void run_v10(const RunConfig& cfg, std::int64_t replicas, ScenarioReport& rep);

}  // namespace qrec::detail
