#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qrec {

// Shared knobs for the CLI and the verification suite. replicas == 0 means
// "use the scenario default"; violate switches a scenario to its deliberately
// wrong expectation to prove the test has power.
struct RunConfig {
    std::int64_t k = 2;
    double window_t = 20.0;
    double window_x = 100.0;
    double t_lo = 1.0;
    double t_hi = 1000.0;
    std::int64_t replicas = 0;
    std::uint64_t seed = 42;
    std::vector<std::string> scenarios;
    std::string output_dir = ".";
    std::string format = "csv";
    bool emit_raw = false;
    int jobs = 1;
    std::optional<double> thin_p;
    bool violate = false;
};

}  // namespace qrec
