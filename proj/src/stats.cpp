#include "qrec/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "qrec/specfun.hpp"

namespace qrec {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void check_edges(const std::vector<double>& edges, const char* which) {
    if (edges.size() < 2) {
        throw std::invalid_argument(std::string(which) + " needs at least two edges");
    }
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (!(edges[i - 1] < edges[i])) {
            throw std::invalid_argument(std::string(which) + " edges must strictly increase");
        }
    }
}

// Bin index for half-open cells (e_i, e_{i+1}]; -1 when outside the range.
std::ptrdiff_t bin_index(const std::vector<double>& edges, double v) {
    if (!(v > edges.front()) || v > edges.back()) return -1;
    const auto it = std::lower_bound(edges.begin(), edges.end(), v);
    return (it - edges.begin()) - 1;
}

}  // namespace

Chi2Stat chi_square_stat(const BinnedCounts& bc) {
    if (bc.counts.empty() || bc.counts.size() != bc.expected.size()) {
        throw std::invalid_argument("counts and expected must be nonempty and equal-sized");
    }
    for (double e : bc.expected) {
        if (!std::isfinite(e) || e < 0.0) {
            throw std::invalid_argument("expected cell mass must be finite and nonnegative");
        }
    }
    // Greedy adjacent merge to expected >= 5 per merged cell.
    std::vector<double> obs, exp;
    double o_acc = 0.0, e_acc = 0.0;
    for (std::size_t i = 0; i < bc.counts.size(); ++i) {
        o_acc += static_cast<double>(bc.counts[i]);
        e_acc += bc.expected[i];
        if (e_acc >= 5.0) {
            obs.push_back(o_acc);
            exp.push_back(e_acc);
            o_acc = 0.0;
            e_acc = 0.0;
        }
    }
    if (o_acc > 0.0 || e_acc > 0.0) {
        if (obs.empty()) {
            throw std::invalid_argument("expected mass too small to form chi-square cells");
        }
        obs.back() += o_acc;
        exp.back() += e_acc;
    }
    if (obs.size() < 2) {
        throw std::invalid_argument("chi-square needs at least two cells after merging");
    }
    Chi2Stat out;
    out.df = static_cast<std::int64_t>(obs.size()) - 1;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double d = obs[i] - exp[i];
        out.statistic += d * d / exp[i];
    }
    out.p_value = chi2_sf(out.statistic, static_cast<double>(out.df));
    out.n = std::accumulate(bc.counts.begin(), bc.counts.end(), std::int64_t{0});
    return out;
}

TestResult chi_square_gof(const BinnedCounts& bc, const std::string& name, double alpha) {
    const Chi2Stat s = chi_square_stat(bc);
    TestResult r;
    r.name = name;
    r.statistic = s.statistic;
    r.threshold = chi2_critical(static_cast<double>(s.df), alpha);
    r.n = s.n;
    r.passed = s.p_value > alpha;
    r.detail = "df=" + std::to_string(s.df) + " p=" + fmt(s.p_value);
    return r;
}

TestResult ks_one_sample(std::vector<double> samples, const std::function<double(double)>& cdf,
                         const std::string& name, double threshold) {
    if (samples.empty()) {
        throw std::invalid_argument("ks_one_sample: empty sample");
    }
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        if (!std::isfinite(f)) {
            throw std::runtime_error("ks_one_sample: cdf not finite at " + fmt(samples[i]));
        }
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    TestResult r;
    r.name = name;
    r.statistic = d;
    r.threshold = threshold > 0.0 ? threshold : 1.36 / std::sqrt(n);
    r.n = static_cast<std::int64_t>(samples.size());
    r.passed = d <= r.threshold;
    return r;
}

TestResult ks_two_sample(std::vector<double> a, std::vector<double> b, const std::string& name,
                         double threshold) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("ks_two_sample: empty sample");
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == v) ++i;
        while (j < b.size() && b[j] == v) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    TestResult r;
    r.name = name;
    r.statistic = d;
    r.threshold = threshold > 0.0 ? threshold : 1.36 * std::sqrt((na + nb) / (na * nb));
    r.n = static_cast<std::int64_t>(a.size() + b.size());
    r.passed = d <= r.threshold;
    r.detail = "na=" + std::to_string(a.size()) + " nb=" + std::to_string(b.size());
    return r;
}

TestResult poisson_dispersion(const std::vector<std::int64_t>& counts, const std::string& name,
                              double band_halfwidth) {
    if (counts.size() < 2) {
        throw std::invalid_argument("poisson_dispersion: need at least two cells");
    }
    const double n = static_cast<double>(counts.size());
    double mean = 0.0;
    for (auto c : counts) mean += static_cast<double>(c);
    mean /= n;
    TestResult r;
    r.name = name;
    r.threshold = band_halfwidth;
    r.n = static_cast<std::int64_t>(counts.size());
    if (mean == 0.0) {
        r.statistic = 0.0;
        r.passed = false;
        r.detail = "all counts zero";
        return r;
    }
    double ss = 0.0;
    for (auto c : counts) {
        const double d = static_cast<double>(c) - mean;
        ss += d * d;
    }
    const double var = ss / (n - 1.0);
    r.statistic = var / mean;
    r.passed = std::fabs(r.statistic - 1.0) <= band_halfwidth;
    r.detail = "mean=" + fmt(mean) + " var=" + fmt(var);
    return r;
}

TestResult proportion_test(std::int64_t successes, std::int64_t trials, double p0,
                           const std::string& name) {
    if (trials <= 0 || successes < 0 || successes > trials) {
        throw std::invalid_argument("proportion_test: bad counts");
    }
    if (!(p0 > 0.0 && p0 < 1.0)) {
        throw std::invalid_argument("proportion_test: p0 must lie in (0, 1)");
    }
    const double phat = static_cast<double>(successes) / static_cast<double>(trials);
    const double se = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(trials));
    TestResult r;
    r.name = name;
    r.statistic = std::fabs(phat - p0) / se;
    r.threshold = 3.0;
    r.n = trials;
    r.passed = r.statistic <= r.threshold;
    r.detail = "phat=" + fmt(phat) + " p0=" + fmt(p0);
    return r;
}

BinnedCounts poisson_histogram(const std::vector<std::int64_t>& counts, double mean,
                               std::int64_t max_cell) {
    if (!(mean > 0.0) || !std::isfinite(mean)) {
        throw std::invalid_argument("poisson_histogram: mean must be positive");
    }
    if (max_cell < 1) {
        throw std::invalid_argument("poisson_histogram: max_cell must be at least 1");
    }
    BinnedCounts bc;
    bc.counts.assign(static_cast<std::size_t>(max_cell) + 1, 0);
    for (auto c : counts) {
        if (c < 0) throw std::invalid_argument("poisson_histogram: negative count");
        const std::size_t cell = c >= max_cell ? static_cast<std::size_t>(max_cell)
                                               : static_cast<std::size_t>(c);
        ++bc.counts[cell];
    }
    const double total = static_cast<double>(counts.size());
    bc.expected.assign(bc.counts.size(), 0.0);
    double pmf = std::exp(-mean);
    double used = 0.0;
    for (std::int64_t j = 0; j < max_cell; ++j) {
        bc.expected[static_cast<std::size_t>(j)] = total * pmf;
        used += total * pmf;
        pmf *= mean / static_cast<double>(j + 1);
    }
    bc.expected.back() = std::max(0.0, total - used);
    return bc;
}

TestResult binned_intensity_compare(const std::vector<std::pair<double, double>>& samples,
                                    const std::vector<double>& edges_u,
                                    const std::vector<double>& edges_v,
                                    const std::function<double(double, double)>& intensity,
                                    double scale, const std::string& name, double alpha) {
    check_edges(edges_u, "u");
    check_edges(edges_v, "v");
    const std::size_t nu = edges_u.size() - 1;
    const std::size_t nv = edges_v.size() - 1;
    BinnedCounts bc;
    bc.edges_a = edges_u;
    bc.edges_b = edges_v;
    bc.counts.assign(nu * nv, 0);
    for (const auto& [u, v] : samples) {
        const auto iu = bin_index(edges_u, u);
        const auto iv = bin_index(edges_v, v);
        if (iu < 0 || iv < 0) continue;
        ++bc.counts[static_cast<std::size_t>(iu) * nv + static_cast<std::size_t>(iv)];
    }
    bc.expected.assign(nu * nv, 0.0);
    for (std::size_t i = 0; i < nu; ++i) {
        for (std::size_t j = 0; j < nv; ++j) {
            double e;
            try {
                e = scale * integrate_2d(intensity, edges_u[i], edges_u[i + 1], edges_v[j],
                                         edges_v[j + 1], 1e-6);
            } catch (const std::exception& ex) {
                throw std::runtime_error("cell (" + std::to_string(i) + "," + std::to_string(j) +
                                         "): " + ex.what());
            }
            if (!std::isfinite(e) || e < 0.0) {
                throw std::runtime_error("cell (" + std::to_string(i) + "," + std::to_string(j) +
                                         "): bad expected mass " + fmt(e));
            }
            bc.expected[i * nv + j] = e;
        }
    }
    return chi_square_gof(bc, name, alpha);
}

TestResult binned_intensity_compare(const std::vector<double>& samples,
                                    const std::vector<double>& edges,
                                    const std::function<double(double)>& intensity, double scale,
                                    const std::string& name, double alpha) {
    check_edges(edges, "bin");
    const std::size_t nb = edges.size() - 1;
    BinnedCounts bc;
    bc.edges_a = edges;
    bc.counts.assign(nb, 0);
    for (double s : samples) {
        const auto i = bin_index(edges, s);
        if (i < 0) continue;
        ++bc.counts[static_cast<std::size_t>(i)];
    }
    bc.expected.assign(nb, 0.0);
    for (std::size_t i = 0; i < nb; ++i) {
        double e;
        try {
            e = scale * integrate_1d(intensity, edges[i], edges[i + 1], 1e-6);
        } catch (const std::exception& ex) {
            throw std::runtime_error("cell (" + std::to_string(i) + "): " + ex.what());
        }
        if (!std::isfinite(e) || e < 0.0) {
            throw std::runtime_error("cell (" + std::to_string(i) + "): bad expected mass " +
                                     fmt(e));
        }
        bc.expected[i] = e;
    }
    return chi_square_gof(bc, name, alpha);
}

double pearson_corr(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2) {
        throw std::invalid_argument("pearson_corr: need equal-sized samples of at least two");
    }
    const double n = static_cast<double>(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - ma;
        const double db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa == 0.0 || sbb == 0.0) return 0.0;
    return sab / std::sqrt(saa * sbb);
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("total_variation: supports differ in size");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += std::fabs(p[i] - q[i]);
    }
    return 0.5 * s;
}

}  // namespace qrec
