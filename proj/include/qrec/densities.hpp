#pragma once

#include <vector>

#include "qrec/pointset.hpp"

namespace qrec {

// Staircase of corner positions: t strictly increasing, x strictly decreasing,
// all coordinates positive and finite, at least one point. The level k may be
// any positive real.
struct CornerChain {
    double k = 0.0;
    std::vector<PlanarPoint> points;
};

// Which value multiplies each holding interval (t_i - t_{i-1}) in the joint
// corner density exponent: the value held over that interval (previous corner)
// or the value jumped to at its end. hold_previous is the convention the
// verification suite confirms; hold_next is kept so the resolution test can
// score both.
enum class ExponentConvention { hold_previous, hold_next };

// Density of the k-th minimum at time t: e^{-tx} (tx)^{k-1} t / Gamma(k).
double gamma_marginal_pdf(double k, double t, double x);

// P(k-th minimum at time t <= x), the regularized lower incomplete gamma at tx.
double gamma_marginal_cdf(double k, double t, double x);

// Plane intensity of level-k corners: k (tx)^{k-1} e^{-tx} / Gamma(k).
double corner_intensity_p1(double k, double t, double x);

// Plane intensity of rank-k records; corners carry an extra factor k.
double record_intensity(double k, double t, double x);

// Log joint intensity of m consecutive corners. Stays finite for chains whose
// density over/underflows double range (|log| up to ~700 per term, m to 200).
double log_joint_corner_density_pm(const CornerChain& chain,
                                   ExponentConvention conv = ExponentConvention::hold_previous);

// exp of the above; reduces to corner_intensity_p1 at m = 1.
double joint_corner_density_pm(const CornerChain& chain,
                               ExponentConvention conv = ExponentConvention::hold_previous);

// Chain with both axes swapped and order reversed; a valid chain again, and
// the joint density is invariant under this map.
CornerChain reflect_chain(const CornerChain& chain);

// Intensity of the lifetime-marked corner value process: k e^{-sx}.
double j_intensity(double k, double s, double x);

}  // namespace qrec
