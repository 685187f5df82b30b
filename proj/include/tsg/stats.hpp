#pragma once

#include <vector>

namespace tsg::stats {

// Standard normal distribution function.
double normal_cdf(double x);

// Two-sided p-value of an observed standard normal statistic.
double normal_two_sided_p(double z);

// Upper-tail probability of the F distribution with d1, d2 degrees of
// freedom; nonpositive statistics map to 1.
double f_upper_p(double f, double d1, double d2);

// Fisher variance-stabilizing transform atanh(r), clamped away from the
// poles at |r| = 1.
double fisher_z(double r);

double sample_mean(const std::vector<double>& x);
double sample_variance(const std::vector<double>& x);  // divisor n - 1
double sample_correlation(const std::vector<double>& x,
                          const std::vector<double>& y);

// Kolmogorov-Smirnov distance between the sample and the standard normal.
double ks_statistic_normal(std::vector<double> data);

// Asymptotic p-value of the KS statistic with the usual finite-sample
// correction of the effective sample size.
double ks_p_value(double d, int n);

}  // namespace tsg::stats
