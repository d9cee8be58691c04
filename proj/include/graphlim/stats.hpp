#ifndef GRAPHLIM_STATS_HPP
#define GRAPHLIM_STATS_HPP

#include <vector>

namespace graphlim {

struct MeanStdErr {
    double mean = 0;
    double std_error = 0;
    long long count = 0;
};

MeanStdErr mean_stderr(const std::vector<double>& xs);

/// Upper regularized incomplete gamma Q(a, x); series/continued-fraction
/// split at x = a + 1.
double gamma_q(double a, double x);

/// Survival function of the chi-square distribution with dof degrees of
/// freedom, i.e. the p-value of an observed statistic.
double chi_square_sf(double stat, int dof);

/// Pearson statistic against expected counts (expected > 0 entries only;
/// zero-expected cells must be empty or the statistic is infinite).
double chi_square_stat(const std::vector<long long>& observed, const std::vector<double>& expected);

} // namespace graphlim

#endif
