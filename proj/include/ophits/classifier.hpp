#pragma once

// First stage: Naive Bayes over sentence features. Count features use
// per-class Gaussian likelihoods; root polarity and the dependency flags use
// Laplace-smoothed categorical / Bernoulli likelihoods.

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ophits/corpus.hpp"
#include "ophits/error.hpp"
#include "ophits/features.hpp"

namespace ophits {

inline constexpr double kVarianceFloor = 1e-3;
inline constexpr double kPseudoCount = 1.0;
/// Posteriors are kept this far away from 0 and 1.
inline constexpr double kMinPosterior = 1e-12;
inline constexpr const char* kModelVersion = "nbmodel-v1";

enum class OpinionClass : std::size_t { Opinionated = 0, Factual = 1 };

struct Gaussian {
  double mean = 0.0;
  double variance = 1.0;

  double log_density(double x) const {
    const double d = x - mean;
    return -0.5 * std::log(2.0 * std::numbers::pi * variance) - d * d / (2.0 * variance);
  }
  bool operator==(const Gaussian&) const = default;
};

struct ClassConditionals {
  Gaussian pos_count;
  Gaussian neg_count;
  std::array<double, 3> root_polarity{1.0 / 3, 1.0 / 3, 1.0 / 3};  // indexed by Polarity
  double has_acomp = 0.5;
  double has_xcomp = 0.5;
  double has_advmod = 0.5;

  bool operator==(const ClassConditionals&) const = default;

  double log_likelihood(const FeatureVector& fv) const {
    auto bern = [](double p, bool x) { return std::log(x ? p : 1.0 - p); };
    return pos_count.log_density(fv.pos_count) + neg_count.log_density(fv.neg_count) +
           std::log(root_polarity[static_cast<std::size_t>(fv.root_polarity)]) + bern(has_acomp, fv.has_acomp) +
           bern(has_xcomp, fv.has_xcomp) + bern(has_advmod, fv.has_advmod);
  }
};

struct NBModel {
  std::array<double, 2> class_prior{0.5, 0.5};  // indexed by OpinionClass
  std::array<ClassConditionals, 2> conditionals;

  const ClassConditionals& of(OpinionClass c) const { return conditionals[static_cast<std::size_t>(c)]; }
  double prior(OpinionClass c) const { return class_prior[static_cast<std::size_t>(c)]; }
  bool operator==(const NBModel&) const = default;
};

struct LabeledFeatures {
  FeatureVector features;
  OpinionClass label;
};

namespace detail {

inline Gaussian fit_gaussian(const std::vector<double>& xs) {
  Gaussian g;
  double sum = 0.0;
  for (double x : xs) sum += x;
  g.mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - g.mean) * (x - g.mean);
  const double var = xs.size() > 1 ? ss / static_cast<double>(xs.size() - 1) : 0.0;
  g.variance = std::max(var, kVarianceFloor);
  return g;
}

inline const char* class_name(OpinionClass c) {
  return c == OpinionClass::Opinionated ? "opinionated" : "factual";
}

}  // namespace detail

inline NBModel train(const std::vector<LabeledFeatures>& data) {
  std::array<std::vector<const FeatureVector*>, 2> by_class;
  for (const auto& d : data) by_class[static_cast<std::size_t>(d.label)].push_back(&d.features);
  for (auto c : {OpinionClass::Opinionated, OpinionClass::Factual})
    if (by_class[static_cast<std::size_t>(c)].empty())
      throw InputError(std::string("cannot train: no labeled ") + detail::class_name(c) + " sentences");

  const double total = static_cast<double>(data.size());
  NBModel model;
  for (std::size_t c = 0; c < 2; ++c) {
    const auto& rows = by_class[c];
    const double count = static_cast<double>(rows.size());
    model.class_prior[c] = (count + kPseudoCount) / (total + 2.0 * kPseudoCount);

    std::vector<double> pos, neg;
    std::array<double, 3> root{};
    double acomp = 0, xcomp = 0, advmod = 0;
    for (const FeatureVector* fv : rows) {
      pos.push_back(fv->pos_count);
      neg.push_back(fv->neg_count);
      root[static_cast<std::size_t>(fv->root_polarity)] += 1.0;
      acomp += fv->has_acomp;
      xcomp += fv->has_xcomp;
      advmod += fv->has_advmod;
    }
    auto& cc = model.conditionals[c];
    cc.pos_count = detail::fit_gaussian(pos);
    cc.neg_count = detail::fit_gaussian(neg);
    for (std::size_t v = 0; v < 3; ++v) cc.root_polarity[v] = (root[v] + kPseudoCount) / (count + 3.0 * kPseudoCount);
    auto bern = [&](double k) { return (k + kPseudoCount) / (count + 2.0 * kPseudoCount); };
    cc.has_acomp = bern(acomp);
    cc.has_xcomp = bern(xcomp);
    cc.has_advmod = bern(advmod);
  }
  return model;
}

/// Trains on every labeled sentence of the corpus; unlabeled sentences are skipped.
inline NBModel train(const Corpus& corpus, const Lexicon& lex) {
  std::vector<LabeledFeatures> data;
  for (const auto& doc : corpus.documents)
    for (const auto& s : doc.sentences) {
      if (s.label == GoldLabel::Unlabeled) continue;
      data.push_back({extract(s, lex),
                      s.label == GoldLabel::Opinionated ? OpinionClass::Opinionated : OpinionClass::Factual});
    }
  return train(data);
}

/// {P(Opinion), P(Fact)}, computed from the log-odds so that both entries
/// share one denominator even when the log joints are huge.
inline std::array<double, 2> posterior(const NBModel& model, const FeatureVector& fv) {
  std::array<double, 2> logp{};
  for (std::size_t c = 0; c < 2; ++c)
    logp[c] = std::log(model.class_prior[c]) + model.conditionals[c].log_likelihood(fv);
  // With d = log P(lo) - log P(hi) <= 0: P(hi) = 1 / (1 + e^d), P(lo) = e^d / (1 + e^d).
  const bool op_high = logp[0] >= logp[1];
  const double e = std::exp(op_high ? logp[1] - logp[0] : logp[0] - logp[1]);
  const double high = 1.0 / (1.0 + e);
  const double low = e / (1.0 + e);
  double op = op_high ? high : low;
  double fact = op_high ? low : high;
  if (op < kMinPosterior || fact < kMinPosterior) {
    op = std::clamp(op, kMinPosterior, 1.0 - kMinPosterior);
    fact = 1.0 - op;
  }
  return {op, fact};
}

inline double predict(const NBModel& model, const FeatureVector& fv) { return posterior(model, fv)[0]; }

/// P_i(Opinion) for every sentence of a document, in position order.
inline std::vector<double> sentence_priors(const NBModel& model, const AnnotatedDocument& doc, const Lexicon& lex) {
  std::vector<double> out;
  out.reserve(doc.size());
  for (const auto& s : doc.sentences) out.push_back(predict(model, extract(s, lex)));
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::json to_json(const NBModel& m) {
  auto gauss = [](const Gaussian& g) { return nlohmann::json{{"mean", g.mean}, {"variance", g.variance}}; };
  nlohmann::json classes = nlohmann::json::object();
  for (auto c : {OpinionClass::Opinionated, OpinionClass::Factual}) {
    const auto& cc = m.of(c);
    classes[detail::class_name(c)] = {
        {"pos_count", gauss(cc.pos_count)},
        {"neg_count", gauss(cc.neg_count)},
        {"root_polarity",
         {{"positive", cc.root_polarity[0]}, {"negative", cc.root_polarity[1]}, {"neutral", cc.root_polarity[2]}}},
        {"has_acomp", cc.has_acomp},
        {"has_xcomp", cc.has_xcomp},
        {"has_advmod", cc.has_advmod},
    };
  }
  return {
      {"version", kModelVersion},
      {"variance_floor", kVarianceFloor},
      {"pseudo_count", kPseudoCount},
      {"class_prior",
       {{"opinionated", m.prior(OpinionClass::Opinionated)}, {"factual", m.prior(OpinionClass::Factual)}}},
      {"classes", classes},
  };
}

inline NBModel model_from_json(const nlohmann::json& j) {
  NBModel m;
  try {
    if (j.at("version").get<std::string>() != kModelVersion)
      throw InputError("unsupported model version '" + j.at("version").get<std::string>() + "'");
    m.class_prior[0] = j.at("class_prior").at("opinionated").get<double>();
    m.class_prior[1] = j.at("class_prior").at("factual").get<double>();
    for (auto c : {OpinionClass::Opinionated, OpinionClass::Factual}) {
      const auto& jc = j.at("classes").at(detail::class_name(c));
      auto& cc = m.conditionals[static_cast<std::size_t>(c)];
      cc.pos_count = {jc.at("pos_count").at("mean").get<double>(), jc.at("pos_count").at("variance").get<double>()};
      cc.neg_count = {jc.at("neg_count").at("mean").get<double>(), jc.at("neg_count").at("variance").get<double>()};
      const auto& rp = jc.at("root_polarity");
      cc.root_polarity = {rp.at("positive").get<double>(), rp.at("negative").get<double>(),
                          rp.at("neutral").get<double>()};
      cc.has_acomp = jc.at("has_acomp").get<double>();
      cc.has_xcomp = jc.at("has_xcomp").get<double>();
      cc.has_advmod = jc.at("has_advmod").get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed model file: ") + e.what());
  }

  auto open_unit = [](double p) { return p > 0.0 && p < 1.0; };
  if (!open_unit(m.class_prior[0]) || !open_unit(m.class_prior[1]) ||
      std::abs(m.class_prior[0] + m.class_prior[1] - 1.0) > 1e-12)
    throw InputError("model class priors must lie in (0,1) and sum to 1");
  for (const auto& cc : m.conditionals) {
    for (double p : cc.root_polarity)
      if (!open_unit(p)) throw InputError("model root-polarity parameter outside (0,1)");
    for (double p : {cc.has_acomp, cc.has_xcomp, cc.has_advmod})
      if (!open_unit(p)) throw InputError("model Bernoulli parameter outside (0,1)");
    if (cc.pos_count.variance < kVarianceFloor || cc.neg_count.variance < kVarianceFloor)
      throw InputError("model variance below floor");
  }
  return m;
}

inline void save_model(const std::filesystem::path& path, const NBModel& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write model file " + path.string());
  out << to_json(m).dump(2) << '\n';
}

inline NBModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed model file: ") + e.what());
  }
  return model_from_json(j);
}

}  // namespace ophits
