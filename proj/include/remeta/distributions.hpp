#ifndef REMETA_DISTRIBUTIONS_HPP
#define REMETA_DISTRIBUTIONS_HPP

#include <span>
#include <string>
#include <vector>

#include "remeta/rng.hpp"

namespace remeta {

// Largest skewness a skew-normal can attain (shape -> infinity).
inline constexpr double kSkewNormalMaxSkewness = 0.9952717;

// Location/scale/shape parameterization.
struct SkewNormalParams {
  double location = 0.0;  // xi
  double scale = 1.0;     // omega, > 0
  double shape = 0.0;     // gamma; 0 reduces to N(location, scale^2)
};

// Mean/variance/skewness parameterization of the same family.
struct SkewNormalMoments {
  double mean = 0.0;
  double variance = 1.0;   // > 0
  double skewness = 0.0;   // |skewness| < kSkewNormalMaxSkewness
};

// Location-scale t with finite variance.
struct TDistParams {
  double mean = 0.0;
  double scale = 1.0;  // omega, > 0
  double dof = 3.0;    // nu, > 2 so the variance exists
};

struct StickBreak {
  std::vector<double> sticks;   // q_1..q_{N-1}, each in [0,1]
  std::vector<double> weights;  // p_1..p_N, sums to 1
};

enum class Family {
  Normal,       // par = {mean, sd}
  HalfNormal,   // par = {scale}, support [0, inf)
  Uniform,      // par = {lo, hi}
  Exponential,  // par = {rate}, support [0, inf)
  Gamma,        // par = {shape, rate}, support (0, inf)
  StudentT,     // par = {mean, scale, dof}
  SkewNormal,   // par = {location, scale, shape}
  BetaStick,    // par = {alpha}: Beta(1, alpha) on [0,1]
};

// Uniform carrier for prior/sampling specifications.
struct DistSpec {
  Family family = Family::Normal;
  std::vector<double> par;

  static DistSpec normal(double mean, double sd) { return {Family::Normal, {mean, sd}}; }
  static DistSpec half_normal(double scale) { return {Family::HalfNormal, {scale}}; }
  static DistSpec uniform(double lo, double hi) { return {Family::Uniform, {lo, hi}}; }
  static DistSpec exponential(double rate) { return {Family::Exponential, {rate}}; }
  static DistSpec gamma_dist(double shape, double rate) { return {Family::Gamma, {shape, rate}}; }
  static DistSpec student_t(double mean, double scale, double dof) {
    return {Family::StudentT, {mean, scale, dof}};
  }
  static DistSpec skew_normal(double location, double scale, double shape) {
    return {Family::SkewNormal, {location, scale, shape}};
  }
  static DistSpec beta_stick(double alpha) { return {Family::BetaStick, {alpha}}; }

  // Support endpoints (for samplers and Metropolis proposal clipping).
  double support_lo() const;
  double support_hi() const;
};

// Moment -> parameter map. Closed form; throws std::domain_error when
// |skewness| >= kSkewNormalMaxSkewness or variance <= 0.
SkewNormalParams sn_from_moments(const SkewNormalMoments& m);

// Parameter -> moment map; inverse of sn_from_moments.
SkewNormalMoments sn_to_moments(const SkewNormalParams& p);

// Scale of a t-distribution with variance tau2: omega = sqrt(tau2 (nu-2)/nu).
double t_scale(double tau2, double nu);

// Weights from raw sticks; the final weight absorbs the leftover mass.
StickBreak stick_break(std::span<const double> sticks);

// Truncation level N = ceil(1 + 5 alpha_max), the epsilon = 0.01 rule.
int dp_truncation(double alpha_max);

// Natural-log density; -inf outside the support.
double log_density(const DistSpec& d, double x);

double sample(const DistSpec& d, Rng& rng);
double sample_sn(const SkewNormalParams& p, Rng& rng);
int sample_binomial(int m, double p, Rng& rng);
long sample_discrete_uniform(long lo, long hi, Rng& rng);

double skew_normal_logpdf(double x, const SkewNormalParams& p);
double student_t_logpdf(double x, const TDistParams& p);

std::string family_name(Family f);

}  // namespace remeta

#endif  // REMETA_DISTRIBUTIONS_HPP
