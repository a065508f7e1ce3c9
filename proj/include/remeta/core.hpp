#ifndef REMETA_CORE_HPP
#define REMETA_CORE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "remeta/distributions.hpp"
#include "remeta/mathutil.hpp"

namespace remeta {

class meta_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A study had to be rejected; carries the offending study id.
class study_error : public meta_error {
 public:
  study_error(std::string study_id, const std::string& what)
      : meta_error(what), study_id_(std::move(study_id)) {}
  const std::string& study_id() const { return study_id_; }

 private:
  std::string study_id_;
};

class dataset_too_small : public meta_error {
 public:
  using meta_error::meta_error;
};

// Arm-level binary counts for a single two-arm study.
struct ArmData {
  std::string study_id;
  int events_trt = 0;
  int size_trt = 0;
  int events_ctrl = 0;
  int size_ctrl = 0;
};

struct MetaDataset {
  std::vector<ArmData> studies;
  std::vector<double> true_effects;  // log-OR units; filled only by the generator

  std::size_t n() const { return studies.size(); }
};

struct EffectRow {
  std::string study_id;
  double y = 0.0;  // log odds ratio
  double v = 0.0;  // within-study variance, treated as known
  bool continuity_corrected = false;
};

struct ExclusionReport {
  std::vector<std::string> excluded_ids;
  std::vector<std::string> reasons;
};

// Drops double-zero and double-full studies (log-OR undefined even with a
// correction in spirit: no information about the effect). Excluded studies
// are not replaced. Throws dataset_too_small when < 2 studies remain.
std::pair<MetaDataset, ExclusionReport> validate_dataset(const MetaDataset& d);

// Log odds ratios with variance 1/a + 1/b + 1/c + 1/d. When any of the four
// cells is zero, cc is added to all four cells of that study (never a
// subset). Throws study_error on double-zero/double-full input.
std::vector<EffectRow> compute_effects(const MetaDataset& d, double cc = 0.5);

// CSV schema: study_id,events_trt,n_trt,events_ctrl,n_ctrl (header required).
MetaDataset read_dataset_csv(const std::string& path);

enum class Likelihood { Binomial, NormalApprox };
enum class ReFamily { Normal, T, SkewNormal, DpPoints, CommonMeanMixture };
enum class Estimator { Reml, Ml, Bayes };

// One evaluated-model configuration: likelihood, random-effects family,
// estimator, and (Bayesian rows) the prior for each free parameter.
struct ModelSpec {
  std::string model_id;
  Likelihood likelihood = Likelihood::Binomial;
  ReFamily re_family = ReFamily::Normal;
  Estimator estimator = Estimator::Bayes;
  std::map<std::string, DistSpec> priors;
  int dp_truncation = 0;  // 0 means "number of studies", resolved at fit time

  bool is_bayesian() const { return estimator == Estimator::Bayes; }
  bool is_dp() const { return re_family == ReFamily::DpPoints; }
};

// The full catalog of the 15 evaluated models.
const std::vector<ModelSpec>& builtin_models();
const ModelSpec& model_by_id(const std::string& model_id);
// Stable index of a model in the catalog (used for seed derivation).
int model_slot(const std::string& model_id);

struct Interval {
  double lo = kNaN;
  double hi = kNaN;
  bool present() const { return lo == lo && hi == hi; }
};

struct FitResult {
  std::string model_id;
  double mu_hat = kNaN;
  Interval mu_ci;
  double tau2_hat = kNaN;  // NaN when the model does not report it
  Interval tau2_ci;
  std::vector<double> shrinkage;        // empty when unavailable
  std::vector<Interval> shrinkage_ci;
  std::vector<double> outlier_prob;     // common-mean mixture only
  std::map<std::string, double> extras; // nu_hat, skewness_hat, alpha_hat, ...
  bool converged = false;
  double rhat_max = kNaN;
  int iterations = 0;
  double loglik = kNaN;
  std::string note;

  bool has_tau2() const { return tau2_hat == tau2_hat; }
};

std::string fit_result_to_json(const FitResult& f);
FitResult fit_result_from_json(const std::string& text);

}  // namespace remeta

#endif  // REMETA_CORE_HPP
