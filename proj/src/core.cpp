#include "remeta/core.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace remeta {

std::pair<MetaDataset, ExclusionReport> validate_dataset(const MetaDataset& d) {
  MetaDataset kept;
  ExclusionReport report;
  for (std::size_t i = 0; i < d.studies.size(); ++i) {
    const ArmData& s = d.studies[i];
    bool double_zero = s.events_trt == 0 && s.events_ctrl == 0;
    bool double_full = s.events_trt == s.size_trt && s.events_ctrl == s.size_ctrl;
    if (double_zero || double_full) {
      report.excluded_ids.push_back(s.study_id);
      report.reasons.push_back(double_zero ? "zero events in both arms"
                                           : "all events in both arms");
      continue;
    }
    kept.studies.push_back(s);
    if (!d.true_effects.empty()) kept.true_effects.push_back(d.true_effects[i]);
  }
  if (kept.studies.size() < 2)
    throw dataset_too_small("fewer than 2 studies remain after exclusions");
  return {std::move(kept), std::move(report)};
}

std::vector<EffectRow> compute_effects(const MetaDataset& d, double cc) {
  std::vector<EffectRow> rows;
  rows.reserve(d.studies.size());
  for (const ArmData& s : d.studies) {
    double a = s.events_trt;
    double b = s.size_trt - s.events_trt;
    double c = s.events_ctrl;
    double dd = s.size_ctrl - s.events_ctrl;
    if ((a == 0.0 && c == 0.0) || (b == 0.0 && dd == 0.0))
      throw study_error(s.study_id, "study " + s.study_id +
                                        " has no information about the odds ratio");
    EffectRow row;
    row.study_id = s.study_id;
    if (a == 0.0 || b == 0.0 || c == 0.0 || dd == 0.0) {
      a += cc;
      b += cc;
      c += cc;
      dd += cc;
      row.continuity_corrected = true;
    }
    row.y = std::log((a * dd) / (b * c));
    row.v = 1.0 / a + 1.0 / b + 1.0 / c + 1.0 / dd;
    rows.push_back(row);
  }
  return rows;
}

namespace {

int parse_count(const std::string& field, const std::string& study, const std::string& what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(field, &pos);
  } catch (const std::exception&) {
    throw study_error(study, "row '" + study + "': " + what + " is not an integer: '" + field + "'");
  }
  if (pos != field.size() || value < 0)
    throw study_error(study, "row '" + study + "': " + what + " is not a non-negative integer: '" +
                                 field + "'");
  return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

MetaDataset read_dataset_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw meta_error("cannot open dataset file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw meta_error("empty dataset file: " + path);
  auto header = split_csv_line(line);
  const std::vector<std::string> expect = {"study_id", "events_trt", "n_trt", "events_ctrl",
                                           "n_ctrl"};
  if (header != expect)
    throw meta_error("dataset header must be 'study_id,events_trt,n_trt,events_ctrl,n_ctrl'");
  MetaDataset d;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 5) throw meta_error("malformed dataset row: '" + line + "'");
    ArmData s;
    s.study_id = f[0];
    s.events_trt = parse_count(f[1], s.study_id, "events_trt");
    s.size_trt = parse_count(f[2], s.study_id, "n_trt");
    s.events_ctrl = parse_count(f[3], s.study_id, "events_ctrl");
    s.size_ctrl = parse_count(f[4], s.study_id, "n_ctrl");
    if (s.size_trt < 1 || s.size_ctrl < 1)
      throw study_error(s.study_id, "row '" + s.study_id + "': arm sizes must be >= 1");
    if (s.events_trt > s.size_trt || s.events_ctrl > s.size_ctrl)
      throw study_error(s.study_id, "row '" + s.study_id + "': events exceed arm size");
    for (const ArmData& prev : d.studies)
      if (prev.study_id == s.study_id)
        throw study_error(s.study_id, "duplicate study_id '" + s.study_id + "'");
    d.studies.push_back(std::move(s));
  }
  return d;
}

namespace {

std::vector<ModelSpec> make_builtin_models() {
  const DistSpec vague = DistSpec::normal(0.0, 100.0);       // N(0, 10^4)
  const DistSpec hn1 = DistSpec::half_normal(1.0);           // HN(0, 1)
  const DistSpec u10 = DistSpec::uniform(0.0, 10.0);         // U(0, 10)
  const DistSpec gamma_shape = DistSpec::normal(0.0, 5.0);   // N(0, 25) for the shape
  const DistSpec nu_prior = DistSpec::exponential(0.10);     // Exp(0.10), truncated > 2 at fit time

  std::vector<ModelSpec> list;
  auto add = [&list](ModelSpec m) { list.push_back(std::move(m)); };

  add({"binomial-normal-hn", Likelihood::Binomial, ReFamily::Normal, Estimator::Bayes,
       {{"mu", vague}, {"tau", hn1}}, 0});
  add({"binomial-normal-unif", Likelihood::Binomial, ReFamily::Normal, Estimator::Bayes,
       {{"mu", vague}, {"tau", u10}}, 0});
  add({"binomial-t-hn", Likelihood::Binomial, ReFamily::T, Estimator::Bayes,
       {{"mu", vague}, {"omega", hn1}, {"nu", nu_prior}}, 0});
  add({"binomial-t-unif", Likelihood::Binomial, ReFamily::T, Estimator::Bayes,
       {{"mu", vague}, {"omega", u10}, {"nu", nu_prior}}, 0});
  add({"binomial-sn-hn", Likelihood::Binomial, ReFamily::SkewNormal, Estimator::Bayes,
       {{"xi", vague}, {"omega", hn1}, {"gamma", gamma_shape}}, 0});
  add({"binomial-sn-unif", Likelihood::Binomial, ReFamily::SkewNormal, Estimator::Bayes,
       {{"xi", vague}, {"omega", u10}, {"gamma", gamma_shape}}, 0});
  add({"binomial-dp26-hn-unif", Likelihood::Binomial, ReFamily::DpPoints, Estimator::Bayes,
       {{"mu_b", vague}, {"tau_b", hn1}, {"alpha", DistSpec::uniform(0.3, 5.0)}}, 26});
  add({"binomial-dp51-hn-unif", Likelihood::Binomial, ReFamily::DpPoints, Estimator::Bayes,
       {{"mu_b", vague}, {"tau_b", hn1}, {"alpha", DistSpec::uniform(0.3, 10.0)}}, 51});
  add({"binomial-dp26-unif-unif", Likelihood::Binomial, ReFamily::DpPoints, Estimator::Bayes,
       {{"mu_b", vague}, {"tau_b", u10}, {"alpha", DistSpec::uniform(0.3, 5.0)}}, 26});
  add({"binomial-dp51-unif-unif", Likelihood::Binomial, ReFamily::DpPoints, Estimator::Bayes,
       {{"mu_b", vague}, {"tau_b", u10}, {"alpha", DistSpec::uniform(0.3, 10.0)}}, 51});
  add({"binomial-dpn-unif-gamma", Likelihood::Binomial, ReFamily::DpPoints, Estimator::Bayes,
       {{"mu_b", vague}, {"tau_b", u10}, {"alpha", DistSpec::gamma_dist(1.0, 1.0)}}, 0});
  add({"binomial-normal-ml", Likelihood::Binomial, ReFamily::Normal, Estimator::Ml, {}, 0});
  add({"normal-normal-reml", Likelihood::NormalApprox, ReFamily::Normal, Estimator::Reml, {}, 0});
  add({"normal-t", Likelihood::NormalApprox, ReFamily::T, Estimator::Ml, {}, 0});
  add({"common-mean-mixture", Likelihood::NormalApprox, ReFamily::CommonMeanMixture,
       Estimator::Ml, {}, 0});
  return list;
}

}  // namespace

const std::vector<ModelSpec>& builtin_models() {
  static const std::vector<ModelSpec> models = make_builtin_models();
  return models;
}

const ModelSpec& model_by_id(const std::string& model_id) {
  for (const ModelSpec& m : builtin_models())
    if (m.model_id == model_id) return m;
  throw meta_error("unknown model id: '" + model_id + "'");
}

int model_slot(const std::string& model_id) {
  const auto& models = builtin_models();
  for (std::size_t i = 0; i < models.size(); ++i)
    if (models[i].model_id == model_id) return static_cast<int>(i);
  throw meta_error("unknown model id: '" + model_id + "'");
}

namespace {

nlohmann::json number_or_null(double x) {
  if (std::isnan(x)) return nullptr;
  return x;
}

double json_number(const nlohmann::json& j) {
  if (j.is_null()) return kNaN;
  return j.get<double>();
}

nlohmann::json interval_json(const Interval& iv) {
  return {{"lo", number_or_null(iv.lo)}, {"hi", number_or_null(iv.hi)}};
}

Interval interval_from(const nlohmann::json& j) {
  return {json_number(j.at("lo")), json_number(j.at("hi"))};
}

}  // namespace

std::string fit_result_to_json(const FitResult& f) {
  nlohmann::json j;
  j["model_id"] = f.model_id;
  j["mu_hat"] = number_or_null(f.mu_hat);
  j["mu_ci"] = interval_json(f.mu_ci);
  j["tau2_hat"] = number_or_null(f.tau2_hat);
  j["tau2_ci"] = interval_json(f.tau2_ci);
  j["shrinkage"] = f.shrinkage;
  nlohmann::json sci = nlohmann::json::array();
  for (const Interval& iv : f.shrinkage_ci) sci.push_back(interval_json(iv));
  j["shrinkage_ci"] = sci;
  j["outlier_prob"] = f.outlier_prob;
  j["extras"] = f.extras;
  j["converged"] = f.converged;
  j["rhat_max"] = number_or_null(f.rhat_max);
  j["iterations"] = f.iterations;
  j["loglik"] = number_or_null(f.loglik);
  j["note"] = f.note;
  return j.dump(2);
}

FitResult fit_result_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FitResult f;
  f.model_id = j.at("model_id").get<std::string>();
  f.mu_hat = json_number(j.at("mu_hat"));
  f.mu_ci = interval_from(j.at("mu_ci"));
  f.tau2_hat = json_number(j.at("tau2_hat"));
  f.tau2_ci = interval_from(j.at("tau2_ci"));
  f.shrinkage = j.at("shrinkage").get<std::vector<double>>();
  for (const auto& iv : j.at("shrinkage_ci")) f.shrinkage_ci.push_back(interval_from(iv));
  f.outlier_prob = j.at("outlier_prob").get<std::vector<double>>();
  f.extras = j.at("extras").get<std::map<std::string, double>>();
  f.converged = j.at("converged").get<bool>();
  f.rhat_max = json_number(j.at("rhat_max"));
  f.iterations = j.at("iterations").get<int>();
  f.loglik = json_number(j.at("loglik"));
  f.note = j.at("note").get<std::string>();
  return f;
}

}  // namespace remeta
