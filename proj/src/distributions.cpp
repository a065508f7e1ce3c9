#include "remeta/distributions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "remeta/mathutil.hpp"

namespace remeta {

namespace {
constexpr double kB = 0.7978845608028654;          // sqrt(2/pi)
constexpr double kSkewCoef = 0.4292036732051034;   // (4 - pi) / 2
}  // namespace

SkewNormalParams sn_from_moments(const SkewNormalMoments& m) {
  if (!(m.variance > 0.0)) throw std::domain_error("sn_from_moments: variance must be > 0");
  if (std::fabs(m.skewness) >= kSkewNormalMaxSkewness)
    throw std::domain_error("sn_from_moments: no skew-normal attains |skewness| >= 0.9953");
  // Solve for bd = b*delta from skewness = kSkewCoef * bd^3 / (1-bd^2)^(3/2):
  // with r = |a/c|^(2/3), bd^2 = r / (1 + r).
  double bd = 0.0;
  if (m.skewness != 0.0) {
    double r = std::pow(std::fabs(m.skewness) / kSkewCoef, 2.0 / 3.0);
    bd = std::copysign(std::sqrt(r / (1.0 + r)), m.skewness);
  }
  double omega = std::sqrt(m.variance / (1.0 - bd * bd));
  double delta = bd / kB;
  SkewNormalParams p;
  p.location = m.mean - omega * bd;
  p.scale = omega;
  p.shape = delta / std::sqrt(1.0 - delta * delta);
  return p;
}

SkewNormalMoments sn_to_moments(const SkewNormalParams& p) {
  if (!(p.scale > 0.0)) throw std::domain_error("sn_to_moments: scale must be > 0");
  double delta = p.shape / std::sqrt(1.0 + p.shape * p.shape);
  double bd = kB * delta;
  SkewNormalMoments m;
  m.mean = p.location + p.scale * bd;
  m.variance = p.scale * p.scale * (1.0 - bd * bd);
  m.skewness = kSkewCoef * bd * bd * bd / std::pow(1.0 - bd * bd, 1.5);
  return m;
}

double t_scale(double tau2, double nu) {
  if (!(nu > 2.0)) throw std::domain_error("t_scale: dof must exceed 2");
  if (!(tau2 > 0.0)) throw std::domain_error("t_scale: variance must be > 0");
  return std::sqrt(tau2 * (nu - 2.0) / nu);
}

StickBreak stick_break(std::span<const double> sticks) {
  StickBreak out;
  out.sticks.assign(sticks.begin(), sticks.end());
  out.weights.resize(sticks.size() + 1);
  double remaining = 1.0;
  for (std::size_t j = 0; j < sticks.size(); ++j) {
    out.weights[j] = sticks[j] * remaining;
    remaining *= 1.0 - sticks[j];
  }
  out.weights.back() = remaining;
  return out;
}

int dp_truncation(double alpha_max) {
  // Tiny slack keeps exact integer products (1 + 5*5 = 26) from rounding up.
  double n = std::ceil(1.0 + 5.0 * alpha_max - 1e-9);
  return n < 1.0 ? 1 : static_cast<int>(n);
}

double skew_normal_logpdf(double x, const SkewNormalParams& p) {
  double z = (x - p.location) / p.scale;
  return std::numbers::ln2 - std::log(p.scale) + norm_logpdf(z, 0.0, 1.0) +
         norm_logcdf(p.shape * z);
}

double student_t_logpdf(double x, const TDistParams& p) {
  double z = (x - p.mean) / p.scale;
  double nu = p.dof;
  return std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
         0.5 * std::log(nu * std::numbers::pi) - std::log(p.scale) -
         0.5 * (nu + 1.0) * std::log1p(z * z / nu);
}

double DistSpec::support_lo() const {
  switch (family) {
    case Family::HalfNormal:
    case Family::Exponential:
    case Family::Gamma:
      return 0.0;
    case Family::Uniform:
      return par[0];
    case Family::BetaStick:
      return 0.0;
    default:
      return kNegInf;
  }
}

double DistSpec::support_hi() const {
  switch (family) {
    case Family::Uniform:
      return par[1];
    case Family::BetaStick:
      return 1.0;
    default:
      return kInf;
  }
}

double log_density(const DistSpec& d, double x) {
  switch (d.family) {
    case Family::Normal:
      return norm_logpdf(x, d.par[0], d.par[1]);
    case Family::HalfNormal: {
      if (x < 0.0) return kNegInf;
      double s = d.par[0];
      return std::numbers::ln2 + norm_logpdf(x, 0.0, s);
    }
    case Family::Uniform: {
      if (x < d.par[0] || x > d.par[1]) return kNegInf;
      return -std::log(d.par[1] - d.par[0]);
    }
    case Family::Exponential: {
      if (x < 0.0) return kNegInf;
      return std::log(d.par[0]) - d.par[0] * x;
    }
    case Family::Gamma: {
      if (x <= 0.0) return kNegInf;
      double shape = d.par[0], rate = d.par[1];
      return shape * std::log(rate) - std::lgamma(shape) + (shape - 1.0) * std::log(x) -
             rate * x;
    }
    case Family::StudentT:
      return student_t_logpdf(x, {d.par[0], d.par[1], d.par[2]});
    case Family::SkewNormal:
      return skew_normal_logpdf(x, {d.par[0], d.par[1], d.par[2]});
    case Family::BetaStick: {
      if (x < 0.0 || x > 1.0) return kNegInf;
      double a = d.par[0];
      return std::log(a) + (a - 1.0) * std::log1p(-x);
    }
  }
  return kNegInf;
}

double sample(const DistSpec& d, Rng& rng) {
  switch (d.family) {
    case Family::Normal:
      return rng.normal(d.par[0], d.par[1]);
    case Family::HalfNormal:
      return std::fabs(rng.normal(0.0, d.par[0]));
    case Family::Uniform:
      return rng.uniform(d.par[0], d.par[1]);
    case Family::Exponential:
      return rng.exponential(d.par[0]);
    case Family::Gamma:
      return rng.gamma(d.par[0], d.par[1]);
    case Family::StudentT: {
      // Normal draw scaled by an inverse-chi: t = mu + omega * z / sqrt(g/nu).
      double nu = d.par[2];
      double z = rng.normal();
      double g = rng.gamma(0.5 * nu, 0.5);
      return d.par[0] + d.par[1] * z / std::sqrt(g / nu);
    }
    case Family::SkewNormal:
      return sample_sn({d.par[0], d.par[1], d.par[2]}, rng);
    case Family::BetaStick:
      return rng.beta(1.0, d.par[0]);
  }
  throw std::logic_error("sample: unknown family");
}

double sample_sn(const SkewNormalParams& p, Rng& rng) {
  double delta = p.shape / std::sqrt(1.0 + p.shape * p.shape);
  double z0 = rng.normal();
  double z1 = rng.normal();
  return p.location + p.scale * (delta * std::fabs(z0) + std::sqrt(1.0 - delta * delta) * z1);
}

int sample_binomial(int m, double p, Rng& rng) { return rng.binomial(m, p); }

long sample_discrete_uniform(long lo, long hi, Rng& rng) { return rng.uniform_int(lo, hi); }

std::string family_name(Family f) {
  switch (f) {
    case Family::Normal: return "normal";
    case Family::HalfNormal: return "half-normal";
    case Family::Uniform: return "uniform";
    case Family::Exponential: return "exponential";
    case Family::Gamma: return "gamma";
    case Family::StudentT: return "student-t";
    case Family::SkewNormal: return "skew-normal";
    case Family::BetaStick: return "beta-stick";
  }
  return "?";
}

}  // namespace remeta
