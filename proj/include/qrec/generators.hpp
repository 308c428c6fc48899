#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qrec/extraction.hpp"
#include "qrec/pointset.hpp"
#include "qrec/rng.hpp"

namespace qrec {

// One flat of a simulated k-th minimum chain.
struct ChainSegment {
    double start_time = 0.0;
    double value = 0.0;
    double duration = 0.0;
};

// Times with intensity k/t on (t_lo, t_hi]: the exponential image of a
// homogeneous rate-k Poisson process on [ln t_lo, ln t_hi].
GroundPointSet gen_selfsim_poisson(RngStream& stream, double k, double t_lo, double t_hi);

// Consecutive differences, sorted ascending; range spans [min, max] of the
// output. Fewer than two input points: empty output, not an error.
GroundPointSet spacings(const GroundPointSet& gs);

// Markov simulation of the k-th minimum started from its time-t0 marginal:
// holding time Exp(x) at value x, then a multiplicative drop B ~ beta(k,1).
// The final segment is always the truncated one; its duration is cut so that
// start_time + duration lands on t_end.
std::vector<ChainSegment> simulate_M_chain(RngStream& stream, double k, double t0, double t_end);

// Keep each corner independently with probability p; order preserved.
CornerSet bernoulli_thin(RngStream& stream, const CornerSet& cs, double p);

// Lifetime of a record at value x: (E_1 + ... + E_N)/x with iid unit
// exponentials and N ~ harmonic_first_success(k). The overflow marker
// propagates as nullopt.
std::optional<double> record_value_lifetime(RngStream& stream, std::int64_t k, double x,
                                            std::int64_t cap = 1000000);

}  // namespace qrec
