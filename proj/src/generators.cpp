#include "qrec/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qrec {

namespace {

void require_finite_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be positive and finite");
    }
}

}  // namespace

GroundPointSet gen_selfsim_poisson(RngStream& stream, double k, double t_lo, double t_hi) {
    require_finite_positive(k, "k");
    require_finite_positive(t_lo, "t_lo");
    require_finite_positive(t_hi, "t_hi");
    if (!(t_lo < t_hi)) {
        throw std::invalid_argument("t_lo must be less than t_hi");
    }
    const double u_hi = std::log(t_hi);
    double u = std::log(t_lo);
    std::vector<double> pts;
    while (true) {
        u += exp_sample(stream, k);
        if (u > u_hi) break;
        const double t = std::exp(u);
        // exp(u) can overshoot t_hi by an ulp even when u <= u_hi.
        if (t > t_hi) continue;
        if (!pts.empty() && t == pts.back()) continue;
        pts.push_back(t);
    }
    return GroundPointSet(std::move(pts), t_lo, t_hi);
}

GroundPointSet spacings(const GroundPointSet& gs) {
    const auto& pts = gs.points();
    if (pts.size() < 2) {
        return GroundPointSet({}, 0.0, 0.0);
    }
    std::vector<double> diffs;
    diffs.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        diffs.push_back(pts[i] - pts[i - 1]);
    }
    std::sort(diffs.begin(), diffs.end());
    const double lo = diffs.front();
    const double hi = diffs.back();
    return GroundPointSet(std::move(diffs), lo, hi);
}

std::vector<ChainSegment> simulate_M_chain(RngStream& stream, double k, double t0, double t_end) {
    require_finite_positive(k, "k");
    require_finite_positive(t0, "t0");
    require_finite_positive(t_end, "t_end");
    if (!(t0 < t_end)) {
        throw std::invalid_argument("t0 must be less than t_end");
    }
    std::vector<ChainSegment> segments;
    double t = t0;
    double x = gamma_sample(stream, k, t0);
    while (true) {
        const double d = exp_sample(stream, 1.0) / x;
        if (t + d >= t_end) {
            segments.push_back({t, x, t_end - t});
            break;
        }
        segments.push_back({t, x, d});
        t += d;
        x *= beta_k1_sample(stream, k);
    }
    return segments;
}

CornerSet bernoulli_thin(RngStream& stream, const CornerSet& cs, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("thinning probability must lie in [0, 1]");
    }
    CornerSet out;
    out.k = cs.k;
    for (const auto& c : cs.corners) {
        if (stream.uniform() < p) {
            out.corners.push_back(c);
        }
    }
    return out;
}

std::optional<double> record_value_lifetime(RngStream& stream, std::int64_t k, double x,
                                            std::int64_t cap) {
    require_finite_positive(x, "x");
    const auto n = harmonic_first_success(stream, k, cap);
    if (!n.has_value()) {
        return std::nullopt;
    }
    double sum = 0.0;
    for (std::int64_t i = 0; i < *n; ++i) {
        sum += exp_sample(stream, 1.0);
    }
    return sum / x;
}

}  // namespace qrec
