#ifndef REMETA_MATHUTIL_HPP
#define REMETA_MATHUTIL_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace remeta {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// log(1 + e^x) without overflow.
inline double log1pexp(double x) {
  if (x > 35.0) return x;
  if (x < -35.0) return std::exp(x);
  return std::log1p(std::exp(x));
}

inline double invlogit(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

inline double logit(double p) { return std::log(p) - std::log1p(-p); }

inline double sq(double x) { return x * x; }

inline double norm_logpdf(double x, double mean, double sd) {
  double z = (x - mean) / sd;
  return -0.5 * z * z - std::log(sd) - 0.5 * std::log(2.0 * std::numbers::pi);
}

inline double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

// log Phi(x), stable far into the left tail where erfc underflows.
inline double norm_logcdf(double x) {
  if (x > -10.0) return std::log(norm_cdf(x));
  double x2 = x * x;
  // Asymptotic expansion of Mills' ratio.
  return -0.5 * x2 - 0.5 * std::log(2.0 * std::numbers::pi) - std::log(-x) +
         std::log1p(-1.0 / x2 + 3.0 / (x2 * x2));
}

inline double lbinom_coef(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Binomial log-pmf with logit-scale success parameter eta.
inline double binom_logpmf_logit(int k, int m, double eta) {
  return lbinom_coef(m, k) + k * eta - m * log1pexp(eta);
}

inline double mean_of(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double variance_of(std::span<const double> v) {
  // Sample variance (n-1 denominator).
  double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += sq(x - m);
  return s / static_cast<double>(v.size() - 1);
}

inline double sd_of(std::span<const double> v) { return std::sqrt(variance_of(v)); }

// Moment-based skewness m3 / m2^(3/2).
inline double skewness_of(std::span<const double> v) {
  double m = mean_of(v);
  double m2 = 0.0, m3 = 0.0;
  for (double x : v) {
    double d = x - m;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= static_cast<double>(v.size());
  m3 /= static_cast<double>(v.size());
  return m3 / std::pow(m2, 1.5);
}

// Linear-interpolation empirical quantile on a sorted vector (R type 7).
inline double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
  if (sorted.size() == 1) return sorted[0];
  double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  auto lo = static_cast<std::size_t>(std::floor(h));
  auto hi = std::min(lo + 1, sorted.size() - 1);
  double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

inline double quantile_of(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  return quantile_sorted(v, p);
}

inline double logsumexp(std::span<const double> v) {
  double mx = kNegInf;
  for (double x : v) mx = std::max(mx, x);
  if (!std::isfinite(mx)) return mx;
  double s = 0.0;
  for (double x : v) s += std::exp(x - mx);
  return mx + std::log(s);
}

}  // namespace remeta

#endif  // REMETA_MATHUTIL_HPP
