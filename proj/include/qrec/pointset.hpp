#pragma once

#include <cstdint>
#include <vector>

#include "qrec/rng.hpp"

namespace qrec {

struct PlanarPoint {
    double t = 0.0;
    double x = 0.0;
};

inline bool operator==(const PlanarPoint& a, const PlanarPoint& b) {
    return a.t == b.t && a.x == b.x;
}

// Finite realization inside the window (0,T]x(0,X], sorted by t.
// Invariants: every coordinate positive and finite; all t pairwise distinct;
// all x pairwise distinct (rank logic depends on strict dominance).
class PlanarPointSet {
public:
    PlanarPointSet(std::vector<PlanarPoint> points, double window_t, double window_x);

    const std::vector<PlanarPoint>& points() const { return points_; }
    double window_t() const { return window_t_; }
    double window_x() const { return window_x_; }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<PlanarPoint> points_;
    double window_t_ = 0.0;
    double window_x_ = 0.0;
};

// Strictly increasing positive reals inside [range_lo, range_hi] after log_map,
// which may make values negative; range_lo < range_hi except for sets with
// fewer than two points, where range_lo == range_hi is tolerated.
class GroundPointSet {
public:
    GroundPointSet(std::vector<double> points, double range_lo, double range_hi);

    const std::vector<double>& points() const { return points_; }
    double range_lo() const { return range_lo_; }
    double range_hi() const { return range_hi_; }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<double> points_;
    double range_lo_ = 0.0;
    double range_hi_ = 0.0;
};

// Unit-intensity Poisson sample on (0,T]x(0,X]: count ~ Poisson(T*X), points
// iid uniform given the count. Duplicate coordinates (possible in floating
// point) are redrawn until distinct.
PlanarPointSet gen_unit_poisson(RngStream& stream, double T, double X);

// One horizontal band (t_lo, t_hi] x (0, cap].
struct Band {
    double t_lo = 0.0;
    double t_hi = 0.0;
    double cap = 0.0;
};

// Unit-intensity Poisson sample on a union of disjoint bands; the window is
// (0, max t_hi] x (0, max cap]. Carries the value-truncation guard as a
// function of t, so long horizons stay affordable.
PlanarPointSet gen_unit_poisson_banded(RngStream& stream, const std::vector<Band>& bands);

// Log-spaced bands covering (t_lo, t_hi] with cap(t) = min(cap_max, lam/t)
// evaluated at each band's left edge (caps are nonincreasing in t, so the
// left-edge cap dominates the band).
std::vector<Band> hyperbolic_bands(double t_lo, double t_hi, double lam, double cap_max,
                                   double log_step = 0.25);

// (t,x) -> (x,t); the window dimensions swap.
PlanarPointSet reflect(const PlanarPointSet& ps);

// (t,x) -> (t/c, c*x); area-preserving, window maps to (0,T/c]x(0,cX].
PlanarPointSet hyperbolic_rescale(const PlanarPointSet& ps, double c);

// u -> ln u pointwise; range endpoints map likewise.
GroundPointSet log_map(const GroundPointSet& gs);

}  // namespace qrec
