#include "qrec/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qrec {

namespace {

void validate_points(const std::vector<PlanarPoint>& pts, double T, double X) {
    if (!(T > 0.0) || !(X > 0.0) || !std::isfinite(T) || !std::isfinite(X))
        throw std::invalid_argument("PlanarPointSet: window dimensions must be positive and finite");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        if (!std::isfinite(p.t) || !std::isfinite(p.x) || !(p.t > 0.0) || !(p.x > 0.0))
            throw std::invalid_argument("PlanarPointSet: coordinates must be positive and finite");
        if (p.t > T || p.x > X)
            throw std::invalid_argument("PlanarPointSet: point outside window");
        if (i > 0 && !(pts[i - 1].t < p.t))
            throw std::invalid_argument("PlanarPointSet: duplicate t coordinate");
    }
    std::vector<double> xs;
    xs.reserve(pts.size());
    for (const auto& p : pts) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
        throw std::invalid_argument("PlanarPointSet: duplicate x coordinate");
}

}  // namespace

PlanarPointSet::PlanarPointSet(std::vector<PlanarPoint> points, double window_t, double window_x)
    : points_(std::move(points)), window_t_(window_t), window_x_(window_x) {
    std::sort(points_.begin(), points_.end(),
              [](const PlanarPoint& a, const PlanarPoint& b) { return a.t < b.t; });
    validate_points(points_, window_t_, window_x_);
}

GroundPointSet::GroundPointSet(std::vector<double> points, double range_lo, double range_hi)
    : points_(std::move(points)), range_lo_(range_lo), range_hi_(range_hi) {
    if (!std::isfinite(range_lo_) || !std::isfinite(range_hi_))
        throw std::invalid_argument("GroundPointSet: range must be finite");
    if (range_lo_ > range_hi_ || (range_lo_ == range_hi_ && points_.size() > 1))
        throw std::invalid_argument("GroundPointSet: range_lo < range_hi required");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i]))
            throw std::invalid_argument("GroundPointSet: points must be finite");
        if (points_[i] < range_lo_ || points_[i] > range_hi_)
            throw std::invalid_argument("GroundPointSet: point outside range");
        if (i > 0 && !(points_[i - 1] < points_[i]))
            throw std::invalid_argument("GroundPointSet: points must be strictly increasing");
    }
}

namespace {

std::size_t band_of(const std::vector<Band>& bands, double t) {
    for (std::size_t b = 0; b < bands.size(); ++b)
        if (t <= bands[b].t_hi) return b;
    return bands.size() - 1;
}

// Redraw coordinates until all t and all x are pairwise distinct. Exact
// duplicates from a continuous draw are measure zero but floats can collide;
// the repair path almost never runs.
void enforce_distinct(RngStream& stream, std::vector<PlanarPoint>& pts,
                      const std::vector<Band>& bands) {
    if (pts.size() < 2) return;
    std::vector<std::size_t> by_x(pts.size());
    for (int pass = 0; pass < 64; ++pass) {
        std::sort(pts.begin(), pts.end(),
                  [](const PlanarPoint& a, const PlanarPoint& b) { return a.t < b.t; });
        bool clean = true;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (pts[i].t == pts[i - 1].t) {
                const Band& b = bands[band_of(bands, pts[i].t)];
                pts[i].t = b.t_lo + (b.t_hi - b.t_lo) * stream.uniform();
                clean = false;
            }
        }
        for (std::size_t i = 0; i < pts.size(); ++i) by_x[i] = i;
        std::sort(by_x.begin(), by_x.end(),
                  [&pts](std::size_t a, std::size_t b) { return pts[a].x < pts[b].x; });
        for (std::size_t i = 1; i < pts.size(); ++i) {
            std::size_t j = by_x[i];
            if (pts[j].x == pts[by_x[i - 1]].x) {
                const Band& b = bands[band_of(bands, pts[j].t)];
                pts[j].x = b.cap * stream.uniform();
                clean = false;
            }
        }
        if (clean) return;
    }
    throw std::runtime_error("gen_unit_poisson: could not resolve coordinate ties");
}

}  // namespace

PlanarPointSet gen_unit_poisson_banded(RngStream& stream, const std::vector<Band>& bands) {
    if (bands.empty()) throw std::invalid_argument("gen_unit_poisson_banded: no bands");
    double T = 0.0, X = 0.0;
    for (std::size_t i = 0; i < bands.size(); ++i) {
        const Band& b = bands[i];
        if (!(b.t_lo >= 0.0) || !(b.t_hi > b.t_lo) || !(b.cap > 0.0))
            throw std::invalid_argument("gen_unit_poisson_banded: bad band");
        if (i > 0 && bands[i - 1].t_hi > b.t_lo)
            throw std::invalid_argument("gen_unit_poisson_banded: bands must be disjoint and ordered");
        T = std::max(T, b.t_hi);
        X = std::max(X, b.cap);
    }
    std::vector<PlanarPoint> pts;
    for (const Band& b : bands) {
        double area = (b.t_hi - b.t_lo) * b.cap;
        std::int64_t n = poisson_count(stream, area);
        for (std::int64_t i = 0; i < n; ++i) {
            double t = b.t_lo + (b.t_hi - b.t_lo) * stream.uniform();
            double x = b.cap * stream.uniform();
            pts.push_back({t, x});
        }
    }
    enforce_distinct(stream, pts, bands);
    std::sort(pts.begin(), pts.end(),
              [](const PlanarPoint& a, const PlanarPoint& c) { return a.t < c.t; });
    return PlanarPointSet(std::move(pts), T, X);
}

PlanarPointSet gen_unit_poisson(RngStream& stream, double T, double X) {
    if (!(T > 0.0) || !(X > 0.0))
        throw std::invalid_argument("gen_unit_poisson: window dimensions must be positive");
    return gen_unit_poisson_banded(stream, {{0.0, T, X}});
}

std::vector<Band> hyperbolic_bands(double t_lo, double t_hi, double lam, double cap_max,
                                   double log_step) {
    if (!(0.0 < t_lo && t_lo < t_hi) || !(lam > 0.0) || !(cap_max > 0.0) || !(log_step > 0.0))
        throw std::invalid_argument("hyperbolic_bands: bad parameters");
    std::vector<Band> bands;
    double t = t_lo;
    while (t < t_hi) {
        double next = std::min(t_hi, t * std::exp(log_step));
        bands.push_back({t, next, std::min(cap_max, lam / t)});
        t = next;
    }
    return bands;
}

PlanarPointSet reflect(const PlanarPointSet& ps) {
    std::vector<PlanarPoint> pts;
    pts.reserve(ps.size());
    for (const auto& p : ps.points()) pts.push_back({p.x, p.t});
    return PlanarPointSet(std::move(pts), ps.window_x(), ps.window_t());
}

PlanarPointSet hyperbolic_rescale(const PlanarPointSet& ps, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("hyperbolic_rescale: c must be positive");
    std::vector<PlanarPoint> pts;
    pts.reserve(ps.size());
    for (const auto& p : ps.points()) pts.push_back({p.t / c, p.x * c});
    return PlanarPointSet(std::move(pts), ps.window_t() / c, ps.window_x() * c);
}

GroundPointSet log_map(const GroundPointSet& gs) {
    if (!(gs.range_lo() > 0.0))
        throw std::invalid_argument("log_map: range_lo must be positive");
    std::vector<double> pts;
    pts.reserve(gs.size());
    for (double u : gs.points()) pts.push_back(std::log(u));
    return GroundPointSet(std::move(pts), std::log(gs.range_lo()), std::log(gs.range_hi()));
}

}  // namespace qrec
