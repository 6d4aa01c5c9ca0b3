#include "levelga/stats.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace levelga {

namespace {

double acklam(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_quantile: p outside (0,1)");
  double x = acklam(p);
  // One Halley refinement: e = Phi(x) - p, u = e / phi(x).
  const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(x * x / 2.0);
  x = x - u / (1.0 + x * u / 2.0);
  return x;
}

double two_sided_z(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0))
    throw std::invalid_argument("two_sided_z: confidence outside (0,1)");
  return normal_quantile(0.5 + confidence / 2.0);
}

double binomial_confidence_radius(double p_hat, long n, double confidence) {
  if (n < 1) throw std::invalid_argument("binomial_confidence_radius: n < 1");
  const double var = p_hat * (1.0 - p_hat) / static_cast<double>(n);
  return two_sided_z(confidence) * std::sqrt(var);
}

MeanInterval mean_confidence_interval(const std::vector<double>& samples, double confidence) {
  MeanInterval mi;
  mi.count = samples.size();
  if (samples.empty()) return mi;
  double sum = 0.0;
  for (double v : samples) sum += v;
  mi.mean = sum / static_cast<double>(samples.size());
  if (samples.size() < 2) return mi;
  double ss = 0.0;
  for (double v : samples) ss += (v - mi.mean) * (v - mi.mean);
  mi.stddev = std::sqrt(ss / static_cast<double>(samples.size() - 1));
  const double half =
      two_sided_z(confidence) * mi.stddev / std::sqrt(static_cast<double>(samples.size()));
  mi.lo = mi.mean - half;
  mi.hi = mi.mean + half;
  mi.defined = true;
  return mi;
}

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("fit_line: need >= 2 matching points");
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_line: degenerate x values");
  LineFit f;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

}  // namespace levelga
