#pragma once

#include <cstdint>
#include <vector>

#include "qrec/pointset.hpp"

namespace qrec {

// Rank of an atom at its arrival: 1 + number of atoms strictly southwest of it
// (earlier time and smaller value). Rank 1 is a running minimum.
struct RankedPoint {
    PlanarPoint point;
    std::int64_t initial_rank = 0;
};

// A level-k corner is a jump of the k-th minimum path. Clause I: the corner is
// an atom (the arriving atom itself becomes the new k-th minimum). Clause II:
// the corner is a grid point (arrival time of one atom, value of an earlier
// one) and is never an atom of the set.
enum class Clause { I, II };

struct Corner {
    PlanarPoint point;
    Clause clause = Clause::I;
};

// Corners in arrival order: t strictly increasing, x strictly decreasing.
struct CornerSet {
    std::int64_t k = 0;
    std::vector<Corner> corners;
};

// Right-continuous step path of the k-th smallest value up to the horizon.
// jumps[i] = (time, new value); values strictly decrease along the path.
struct StepPath {
    std::int64_t k = 0;
    double horizon = 0.0;
    std::vector<std::pair<double, double>> jumps;
};

// Completed flat of a step path: duration s at value x. The final flat is
// censored by the horizon and never reported.
struct MarkedLifetime {
    double s = 0.0;
    double x = 0.0;
};

// O(n log n) sweep (Fenwick tree over compressed values); output in t order.
std::vector<RankedPoint> initial_ranks(const PlanarPointSet& ps);

// O(n^2) literal counting of strict southwest dominance. Reference oracle.
std::vector<RankedPoint> initial_ranks_oracle(const PlanarPointSet& ps);

// Atoms whose initial rank is exactly k, in t order. Values strictly decrease.
std::vector<PlanarPoint> k_records(const PlanarPointSet& ps, std::int64_t k);
std::vector<PlanarPoint> k_records_oracle(const PlanarPointSet& ps, std::int64_t k);

// Jumps of the k-th minimum, found with a bounded max-heap in O(n log k).
// Fewer than k atoms: empty. Clause I corners coincide with the k-records.
CornerSet k_corners(const PlanarPointSet& ps, std::int64_t k);

// O(n^3) oracle straight from the definitions: clause I atoms have exactly
// k-1 atoms strictly southwest; clause II grid points (t of p, x of q) need
// q strictly west, p strictly south and exactly k-2 atoms strictly southwest.
CornerSet k_corners_oracle(const PlanarPointSet& ps, std::int64_t k);

// Step path of the k-th minimum restricted to (0, horizon].
// Requires 0 < horizon <= ps.window_t().
StepPath kth_min_path(const PlanarPointSet& ps, std::int64_t k, double horizon);

// Completed flats of the path; output size is jumps-1 (the last flat is
// censored by the horizon).
std::vector<MarkedLifetime> lifetimes(const StepPath& path);

// For each pair of consecutive clause I corners, the index distance in the
// corner sequence: 1 + number of corners strictly between them. rec must be
// exactly the clause I subset of cs, else the inputs are inconsistent.
std::vector<std::int64_t> record_gap_counts(const CornerSet& cs,
                                            const std::vector<PlanarPoint>& rec);

}  // namespace qrec
