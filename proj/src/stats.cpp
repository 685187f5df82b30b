#include "tsg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/fisher_f.hpp>

namespace tsg::stats {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_two_sided_p(double z) {
  if (std::isinf(z)) return 0.0;
  return std::erfc(std::abs(z) / std::sqrt(2.0));
}

double f_upper_p(double f, double d1, double d2) {
  if (!(f > 0)) return 1.0;
  const boost::math::fisher_f dist(d1, d2);
  return boost::math::cdf(boost::math::complement(dist, f));
}

double fisher_z(double r) {
  const double clamped = std::clamp(r, -1.0 + 1e-15, 1.0 - 1e-15);
  return std::atanh(clamped);
}

double sample_mean(const std::vector<double>& x) {
  if (x.empty()) throw std::invalid_argument("mean of empty sample");
  double s = 0;
  for (const double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double sample_variance(const std::vector<double>& x) {
  if (x.size() < 2) throw std::invalid_argument("variance needs two points");
  const double m = sample_mean(x);
  double s = 0;
  for (const double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size() - 1);
}

double sample_correlation(const std::vector<double>& x,
                          const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("correlation needs paired samples");
  }
  const double mx = sample_mean(x);
  const double my = sample_mean(y);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0 || syy <= 0) {
    throw std::invalid_argument("correlation of a constant sample");
  }
  return sxy / std::sqrt(sxx * syy);
}

double ks_statistic_normal(std::vector<double> data) {
  if (data.empty()) throw std::invalid_argument("empty sample");
  std::sort(data.begin(), data.end());
  const double n = static_cast<double>(data.size());
  double d = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double cdf = normal_cdf(data[i]);
    d = std::max(d, (static_cast<double>(i) + 1.0) / n - cdf);
    d = std::max(d, cdf - static_cast<double>(i) / n);
  }
  return d;
}

double ks_p_value(double d, int n) {
  if (n <= 0) throw std::invalid_argument("sample size must be positive");
  const double rn = std::sqrt(static_cast<double>(n));
  const double lambda = (rn + 0.12 + 0.11 / rn) * d;
  double p = 0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    p += (j % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace tsg::stats
