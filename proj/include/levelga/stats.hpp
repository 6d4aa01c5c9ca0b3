#pragma once

#include <cstddef>
#include <vector>

namespace levelga {

// Inverse standard normal CDF. Acklam's rational approximation polished with
// one Halley step against erfc, giving near machine precision on (0,1).
double normal_quantile(double p);

// Two-sided z-score for the given confidence level, e.g. 0.99 -> 2.5758...
double two_sided_z(double confidence);

// Half-width z * sqrt(p(1-p)/n) of the normal-approximation confidence
// interval for a binomial proportion.
double binomial_confidence_radius(double p_hat, long n, double confidence);

struct MeanInterval {
  double mean = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double stddev = 0.0;
  std::size_t count = 0;
  bool defined = false;  // needs at least two samples
};

// Normal-approximation two-sided interval for the mean (sample stddev).
MeanInterval mean_confidence_interval(const std::vector<double>& samples, double confidence);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

// Ordinary least squares through (x_i, y_i).
LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace levelga
