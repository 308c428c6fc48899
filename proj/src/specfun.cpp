#include "qrec/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qrec {

double gamma_fn(double a) {
    if (a > 0.0 && a == std::floor(a) && a <= 21.0) {
        double r = 1.0;
        for (int i = 2; i < static_cast<int>(a); ++i) r *= static_cast<double>(i);
        return r;
    }
    return std::tgamma(a);
}

double lgamma_fn(double a) {
    if (a > 0.0 && a == std::floor(a) && a <= 21.0) return std::log(gamma_fn(a));
    return std::lgamma(a);
}

namespace {

// Series for P(a,x), valid and fast for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 10000; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - lgamma_fn(a));
    }
    throw std::runtime_error("reg_gamma_p: series did not converge");
}

// Modified Lentz continued fraction for Q(a,x), valid for x >= a+1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - lgamma_fn(a));
    }
    throw std::runtime_error("reg_gamma_q: continued fraction did not converge");
}

}  // namespace

double reg_gamma_p(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("reg_gamma_p: a must be positive");
    if (x < 0.0) throw std::invalid_argument("reg_gamma_p: x must be nonnegative");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double reg_gamma_q(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("reg_gamma_q: a must be positive");
    if (x < 0.0) throw std::invalid_argument("reg_gamma_q: x must be nonnegative");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi2_sf(double x, double df) {
    if (x <= 0.0) return 1.0;
    return reg_gamma_q(df / 2.0, x / 2.0);
}

double chi2_critical(double df, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("chi2_critical: bad alpha");
    double lo = 0.0, hi = df + 10.0;
    while (chi2_sf(hi, df) > alpha) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (chi2_sf(mid, df) > alpha)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double gamma_quantile(double a, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("gamma_quantile: q in (0,1) required");
    double lo = 0.0, hi = a + 10.0;
    while (reg_gamma_p(a, hi) < q) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (reg_gamma_p(a, mid) < q)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double ks_threshold(std::size_t n, double alpha) {
    if (n == 0) throw std::invalid_argument("ks_threshold: empty sample");
    double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
    return c / std::sqrt(static_cast<double>(n));
}

double ks_two_threshold(std::size_t na, std::size_t nb, double alpha) {
    if (na == 0 || nb == 0) throw std::invalid_argument("ks_two_threshold: empty sample");
    double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
    double m = static_cast<double>(na), n = static_cast<double>(nb);
    return c * std::sqrt((m + n) / (m * n));
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt_1d(const std::function<double(double)>& f, double a, double fa, double b, double fb,
                double m, double fm, double whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, fa, m, fm, flm);
    double right = simpson(m, fm, b, fb, frm);
    double delta = left + right - whole;
    if (depth <= 0) throw std::runtime_error("integrate_1d: max depth reached");
    if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adapt_1d(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
           adapt_1d(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

}  // namespace

double integrate_1d(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    if (a == b) return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fb = f(b), fm = f(m);
    double whole = simpson(a, fa, b, fb, fm);
    double scale = std::fabs(whole);
    if (scale < 1e-300) scale = 1e-300;
    return adapt_1d(f, a, fa, b, fb, m, fm, whole, rel_tol * scale, 48);
}

double integrate_2d(const std::function<double(double, double)>& f, double ax, double bx,
                    double ay, double by, double rel_tol) {
    auto inner = [&](double x) {
        return integrate_1d([&](double y) { return f(x, y); }, ay, by, rel_tol * 0.2);
    };
    return integrate_1d(inner, ax, bx, rel_tol * 0.5);
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1].
constexpr std::array<double, 8> kGl16X = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> kGl16W = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};
constexpr std::array<double, 4> kGl8X = {0.1834346424956498, 0.5255324099163290,
                                         0.7966664774136267, 0.9602898564975363};
constexpr std::array<double, 4> kGl8W = {0.3626837833783620, 0.3137066458778873,
                                         0.2223810344533745, 0.1012285362903763};

template <std::size_t H>
void fill_nodes(const std::array<double, H>& xs, const std::array<double, H>& ws, double lo,
                double hi, std::vector<double>& nodes, std::vector<double>& weights) {
    double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    nodes.clear();
    weights.clear();
    for (std::size_t i = 0; i < H; ++i) {
        nodes.push_back(c - h * xs[H - 1 - i]);
        weights.push_back(h * ws[H - 1 - i]);
    }
    for (std::size_t i = 0; i < H; ++i) {
        nodes.push_back(c + h * xs[i]);
        weights.push_back(h * ws[i]);
    }
}

double tensor4(const std::function<double(double, double, double, double)>& f,
               const std::array<double, 4>& lo, const std::array<double, 4>& hi, bool fine) {
    std::array<std::vector<double>, 4> nodes, weights;
    for (int d = 0; d < 4; ++d) {
        if (fine)
            fill_nodes(kGl16X, kGl16W, lo[d], hi[d], nodes[d], weights[d]);
        else
            fill_nodes(kGl8X, kGl8W, lo[d], hi[d], nodes[d], weights[d]);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < nodes[0].size(); ++i)
        for (std::size_t j = 0; j < nodes[1].size(); ++j)
            for (std::size_t l = 0; l < nodes[2].size(); ++l) {
                double w3 = weights[0][i] * weights[1][j] * weights[2][l];
                double acc = 0.0;
                for (std::size_t m = 0; m < nodes[3].size(); ++m)
                    acc += weights[3][m] * f(nodes[0][i], nodes[1][j], nodes[2][l], nodes[3][m]);
                total += w3 * acc;
            }
    return total;
}

}  // namespace

double integrate_box4(const std::function<double(double, double, double, double)>& f,
                      const std::array<double, 4>& lo, const std::array<double, 4>& hi,
                      double rel_tol) {
    double fine = tensor4(f, lo, hi, true);
    double coarse = tensor4(f, lo, hi, false);
    double scale = std::fabs(fine);
    if (scale < 1e-300) scale = 1e-300;
    if (std::fabs(fine - coarse) > rel_tol * scale * 10.0)
        throw std::runtime_error("integrate_box4: quadrature order check failed");
    return fine;
}

}  // namespace qrec
