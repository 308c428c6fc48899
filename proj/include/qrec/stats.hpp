#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qrec {

// One statistical check. The pass convention depends on the test family and is
// recorded in detail when it is not "statistic <= threshold".
struct TestResult {
    std::string name;
    double statistic = 0.0;
    double threshold = 0.0;
    std::int64_t n = 0;
    bool passed = false;
    std::string detail;
};

// Cell layout: 1D when edges_b is empty, otherwise 2D flattened with the
// a-index major (cell (i, j) at i * nb + j). Edge vectors may be empty for
// categorical cells.
struct BinnedCounts {
    std::vector<double> edges_a;
    std::vector<double> edges_b;
    std::vector<std::int64_t> counts;
    std::vector<double> expected;
};

struct Chi2Stat {
    double statistic = 0.0;
    std::int64_t df = 0;
    double p_value = 0.0;
    std::int64_t n = 0;
};

// Adjacent cells in flattened order are merged until each merged cell holds
// expected mass >= 5; a short trailing group joins its neighbor. df is the
// merged cell count minus one; fewer than two merged cells is an error.
Chi2Stat chi_square_stat(const BinnedCounts& bc);
TestResult chi_square_gof(const BinnedCounts& bc, const std::string& name, double alpha = 0.001);

// Kolmogorov-Smirnov tests; threshold == 0 selects 1.36/sqrt(n) (and its
// two-sample analogue), roughly the 5% level.
TestResult ks_one_sample(std::vector<double> samples, const std::function<double(double)>& cdf,
                         const std::string& name, double threshold = 0.0);
TestResult ks_two_sample(std::vector<double> a, std::vector<double> b, const std::string& name,
                         double threshold = 0.0);

// Variance-to-mean ratio of per-cell counts; passes when |ratio - 1| is
// within the band. All-zero input fails rather than throwing.
TestResult poisson_dispersion(const std::vector<std::int64_t>& counts, const std::string& name,
                              double band_halfwidth = 0.1);

// Two-sided z test for a binomial proportion at 3 sigma.
TestResult proportion_test(std::int64_t successes, std::int64_t trials, double p0,
                           const std::string& name);

// Histogram over {0, 1, ..., max_cell - 1, >= max_cell} with expected mass
// from the Poisson(mean) law scaled to the sample size.
BinnedCounts poisson_histogram(const std::vector<std::int64_t>& counts, double mean,
                               std::int64_t max_cell);

// Bin samples over (edge_i, edge_{i+1}] cells, dropping samples outside the
// covered range, and compare to scale * integral of intensity per cell via
// chi-square.
TestResult binned_intensity_compare(const std::vector<std::pair<double, double>>& samples,
                                    const std::vector<double>& edges_u,
                                    const std::vector<double>& edges_v,
                                    const std::function<double(double, double)>& intensity,
                                    double scale, const std::string& name, double alpha = 0.001);
TestResult binned_intensity_compare(const std::vector<double>& samples,
                                    const std::vector<double>& edges,
                                    const std::function<double(double)>& intensity, double scale,
                                    const std::string& name, double alpha = 0.001);

double pearson_corr(const std::vector<double>& a, const std::vector<double>& b);

// Half the L1 distance between two distributions on a shared support.
double total_variation(const std::vector<double>& p, const std::vector<double>& q);

}  // namespace qrec
