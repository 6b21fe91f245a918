#ifndef PCFE_STATS_HPP
#define PCFE_STATS_HPP

#include <functional>
#include <span>
#include <vector>

namespace pcfe {

// Standard normal quantile, accurate to machine precision (rational initial
// guess refined by one Newton step against erfc-based Phi).
double normal_quantile(double u);

// Survival function of the Kolmogorov distribution:
//   Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2)
double kolmogorov_survival(double lambda);

struct TwoSampleKs {
    double d = 0.0;        // sup |F_n - G_m| over the pooled sample
    double p_value = 1.0;  // asymptotic, with the small-sample correction
};

// Both inputs are sorted in place.
TwoSampleKs ks_two_sample(std::vector<double>& a, std::vector<double>& b);

// Two-sample Cramer-von Mises statistic T (pooled-sweep form).
double cvm_two_sample(const std::vector<double>& a_sorted,
                      const std::vector<double>& b_sorted);

// One-sample KS distance of a sorted sample against a CDF.
double ks_one_sample(std::span<const double> sorted,
                     const std::function<double(double)>& cdf);

// Asymptotic one-sample KS critical value c(alpha)/sqrt(n).
double ks_one_sample_critical(double alpha, std::size_t n);

// Chi-square statistic for uniformity of values in [0,1] over equal bins.
double chi_square_uniform(std::span<const double> values, int bins);

// 99th percentile of chi-square with 9 degrees of freedom (10-bin test).
inline constexpr double kChiSquare9Crit1Percent = 21.665994333461924;

}  // namespace pcfe

#endif
