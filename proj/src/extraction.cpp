#include "qrec/extraction.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace qrec {

namespace {

void require_level(std::int64_t k, const char* who) {
    if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be >= 1");
}

// Fenwick tree over value indices; prefix_count(i) = #inserted indices < i.
class Fenwick {
public:
    explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}

    void add(std::size_t i) {
        for (std::size_t j = i + 1; j < tree_.size(); j += j & (~j + 1)) ++tree_[j];
    }

    std::int64_t prefix_count(std::size_t i) const {
        std::int64_t s = 0;
        for (std::size_t j = i; j > 0; j -= j & (~j + 1)) s += tree_[j];
        return s;
    }

private:
    std::vector<std::int64_t> tree_;
};

std::int64_t sw_count(const std::vector<PlanarPoint>& pts, double t, double x) {
    std::int64_t c = 0;
    for (const auto& p : pts) {
        if (p.t >= t) break;  // pts sorted by t
        if (p.x < x) ++c;
    }
    return c;
}

}  // namespace

std::vector<RankedPoint> initial_ranks(const PlanarPointSet& ps) {
    const auto& pts = ps.points();
    std::vector<double> xs(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) xs[i] = pts[i].x;
    std::sort(xs.begin(), xs.end());
    Fenwick fen(xs.size());
    std::vector<RankedPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        std::size_t xi = static_cast<std::size_t>(
            std::lower_bound(xs.begin(), xs.end(), p.x) - xs.begin());
        out.push_back({p, 1 + fen.prefix_count(xi)});
        fen.add(xi);
    }
    return out;
}

std::vector<RankedPoint> initial_ranks_oracle(const PlanarPointSet& ps) {
    const auto& pts = ps.points();
    std::vector<RankedPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({p, 1 + sw_count(pts, p.t, p.x)});
    return out;
}

namespace {

std::vector<PlanarPoint> records_from_ranks(const std::vector<RankedPoint>& ranked,
                                            std::int64_t k) {
    std::vector<PlanarPoint> out;
    for (const auto& r : ranked)
        if (r.initial_rank == k) out.push_back(r.point);
    return out;
}

}  // namespace

std::vector<PlanarPoint> k_records(const PlanarPointSet& ps, std::int64_t k) {
    require_level(k, "k_records");
    return records_from_ranks(initial_ranks(ps), k);
}

std::vector<PlanarPoint> k_records_oracle(const PlanarPointSet& ps, std::int64_t k) {
    require_level(k, "k_records_oracle");
    return records_from_ranks(initial_ranks_oracle(ps), k);
}

CornerSet k_corners(const PlanarPointSet& ps, std::int64_t k) {
    require_level(k, "k_corners");
    CornerSet out;
    out.k = k;
    // heap holds the k smallest values seen so far; its top is the current
    // k-th minimum once full. Every top change is a corner.
    std::priority_queue<double> heap;
    for (const auto& p : ps.points()) {
        if (static_cast<std::int64_t>(heap.size()) < k) {
            heap.push(p.x);
            if (static_cast<std::int64_t>(heap.size()) == k)
                out.corners.push_back(
                    {{p.t, heap.top()}, heap.top() == p.x ? Clause::I : Clause::II});
        } else if (p.x < heap.top()) {
            heap.pop();
            heap.push(p.x);
            out.corners.push_back(
                {{p.t, heap.top()}, heap.top() == p.x ? Clause::I : Clause::II});
        }
    }
    return out;
}

CornerSet k_corners_oracle(const PlanarPointSet& ps, std::int64_t k) {
    require_level(k, "k_corners_oracle");
    const auto& pts = ps.points();
    CornerSet out;
    out.k = k;
    std::vector<Corner> found;
    for (const auto& p : pts)
        if (sw_count(pts, p.t, p.x) == k - 1) found.push_back({p, Clause::I});
    if (k >= 2) {
        for (const auto& p : pts) {
            for (const auto& q : pts) {
                if (!(q.t < p.t && p.x < q.x)) continue;
                if (sw_count(pts, p.t, q.x) == k - 2) found.push_back({{p.t, q.x}, Clause::II});
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const Corner& a, const Corner& b) { return a.point.t < b.point.t; });
    out.corners = std::move(found);
    return out;
}

StepPath kth_min_path(const PlanarPointSet& ps, std::int64_t k, double horizon) {
    require_level(k, "kth_min_path");
    if (!(horizon > 0.0) || horizon > ps.window_t())
        throw std::invalid_argument("kth_min_path: horizon must lie in (0, window_t]");
    StepPath path;
    path.k = k;
    path.horizon = horizon;
    for (const auto& c : k_corners(ps, k).corners) {
        if (c.point.t > horizon) break;
        path.jumps.emplace_back(c.point.t, c.point.x);
    }
    return path;
}

std::vector<MarkedLifetime> lifetimes(const StepPath& path) {
    std::vector<MarkedLifetime> out;
    if (path.jumps.size() < 2) return out;
    out.reserve(path.jumps.size() - 1);
    for (std::size_t i = 0; i + 1 < path.jumps.size(); ++i)
        out.push_back({path.jumps[i + 1].first - path.jumps[i].first, path.jumps[i].second});
    return out;
}

std::vector<std::int64_t> record_gap_counts(const CornerSet& cs,
                                            const std::vector<PlanarPoint>& rec) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < cs.corners.size(); ++i)
        if (cs.corners[i].clause == Clause::I) idx.push_back(i);
    if (idx.size() != rec.size())
        throw std::invalid_argument("record_gap_counts: record/corner sets inconsistent");
    for (std::size_t j = 0; j < idx.size(); ++j)
        if (!(cs.corners[idx[j]].point == rec[j]))
            throw std::invalid_argument("record_gap_counts: record/corner sets inconsistent");
    std::vector<std::int64_t> out;
    for (std::size_t j = 0; j + 1 < idx.size(); ++j)
        out.push_back(static_cast<std::int64_t>(idx[j + 1] - idx[j]));
    return out;
}

}  // namespace qrec
