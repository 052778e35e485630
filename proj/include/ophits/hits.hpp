#pragma once

// Second stage: weighted HITS over the complete directed sentence graph of
// one article. Hubs stand for opinionated sentences, authorities for the
// factual sentences that support them.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ophits/corpus.hpp"
#include "ophits/error.hpp"
#include "ophits/textmodel.hpp"

namespace ophits {

/// Edge weight W[i][j] = scale * prior_i^hub_exp * sim_ij^sim_exp * (alpha + 1/dist_ij).
/// With use_distance off the distance factor is dropped entirely. The defaults
/// are the tuned operating point (cubed prior, squared similarity, 1 + 1/d).
struct WeightParams {
  double hub_exp = 3.0;
  double sim_exp = 2.0;
  double alpha = 1.0;
  bool use_distance = true;
  double scale = 1.0;

  bool operator==(const WeightParams&) const = default;
};

inline void check(const WeightParams& p) {
  detail::require(p.hub_exp >= 0.0 && p.sim_exp >= 0.0 && p.alpha >= 0.0,
                  "WeightParams: exponents and alpha must be non-negative");
  detail::require(p.scale > 0.0, "WeightParams: scale must be positive");
}

/// Dense n x n edge weights, row-major: at(i, j) is the weight of edge i -> j.
class SentenceGraph {
 public:
  SentenceGraph() = default;
  explicit SentenceGraph(std::size_t n) : n_(n), w_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
  double& at(std::size_t i, std::size_t j) { return w_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {w_.data() + i * n_, n_}; }

  SentenceGraph scaled(double c) const {
    SentenceGraph g = *this;
    for (double& w : g.w_) w *= c;
    return g;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> w_;
};

/// Edge weight for one ordered pair, given the source prior, the pair's
/// cosine similarity and their sentence distance.
inline double edge_weight(double source_prior, double similarity, int distance, const WeightParams& p) {
  double w = p.scale * std::pow(source_prior, p.hub_exp) * std::pow(similarity, p.sim_exp);
  if (p.use_distance) w *= p.alpha + 1.0 / static_cast<double>(distance);
  return w;
}

inline SentenceGraph build_graph(std::span<const double> priors, const ArticleVectorSpace& space,
                                 const WeightParams& params = {}) {
  check(params);
  const std::size_t n = priors.size();
  detail::require(space.vectors.size() == n, "build_graph: prior count does not match sentence count");
  for (double p : priors) detail::require(p > 0.0 && p < 1.0, "build_graph: priors must lie in (0,1)");

  SentenceGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double sim = cosine_sim(space.vectors[i], space.vectors[j]);
      const int dist = sentence_distance(static_cast<int>(i), static_cast<int>(j));
      g.at(i, j) = edge_weight(priors[i], sim, dist, params);
      g.at(j, i) = edge_weight(priors[j], sim, dist, params);
    }
  return g;
}

inline SentenceGraph build_graph(const AnnotatedDocument& doc, std::span<const double> priors,
                                 const ArticleVectorSpace& space, const WeightParams& params = {}) {
  detail::require(doc.size() == priors.size(), "build_graph: prior count does not match sentence count");
  return build_graph(priors, space, params);
}

struct HitsState {
  std::vector<double> hub;
  std::vector<double> auth;
  std::size_t iterations = 0;
  double epsilon = 0.0;
  std::vector<double> trace;  // MSE after each iteration
  bool converged = false;
};

inline constexpr double kDefaultEpsilon = 0.01;
inline constexpr std::size_t kDefaultMaxIter = 1000;

namespace detail {

/// Scales v to unit L2 norm in place; returns false (and leaves v) if v is all zero.
inline bool l2_normalize(std::vector<double>& v) {
  double sq = 0.0;
  for (double x : v) sq += x * x;
  if (sq == 0.0) return false;
  const double inv = 1.0 / std::sqrt(sq);
  for (double& x : v) x *= inv;
  return true;
}

}  // namespace detail

/// Iterates H_i <- sum_j W_ij A_j and A_i <- sum_j W_ji H_j from H = priors,
/// A = 1 - priors, normalizing both vectors after every step. Stops once the
/// joint mean squared change of H and A drops below epsilon, once both
/// vectors vanish, or after max_iter iterations (converged stays false).
inline HitsState run_hits(const SentenceGraph& graph, std::span<const double> priors,
                          double epsilon = kDefaultEpsilon, std::size_t max_iter = kDefaultMaxIter) {
  const std::size_t n = graph.size();
  detail::require(priors.size() == n, "run_hits: prior count does not match graph size");
  detail::require(epsilon > 0.0, "run_hits: epsilon must be positive");
  for (double p : priors) detail::require(p >= 0.0 && p <= 1.0, "run_hits: priors must lie in [0,1]");

  HitsState st;
  st.epsilon = epsilon;
  st.hub.assign(priors.begin(), priors.end());
  st.auth.resize(n);
  std::transform(priors.begin(), priors.end(), st.auth.begin(), [](double p) { return 1.0 - p; });
  if (n == 0) {
    st.converged = true;
    return st;
  }

  std::vector<double> hub(n), auth(n);
  while (st.iterations < max_iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double h = 0.0, a = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        h += graph.at(i, j) * st.auth[j];
        a += graph.at(j, i) * st.hub[j];
      }
      hub[i] = h;
      auth[i] = a;
    }
    const bool hub_alive = detail::l2_normalize(hub);
    const bool auth_alive = detail::l2_normalize(auth);

    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sq += (hub[i] - st.hub[i]) * (hub[i] - st.hub[i]);
      sq += (auth[i] - st.auth[i]) * (auth[i] - st.auth[i]);
    }
    const double mse = sq / (2.0 * static_cast<double>(n));
    st.hub.swap(hub);
    st.auth.swap(auth);
    st.trace.push_back(mse);
    ++st.iterations;

    // Once both vectors vanish every later iterate is zero as well.
    if (mse < epsilon || (!hub_alive && !auth_alive)) {
      st.converged = true;
      break;
    }
  }
  return st;
}

struct RankedSentences {
  std::vector<std::size_t> order;  // sentence positions, best first
  std::vector<double> scores;      // score of order[r]

  std::size_t size() const { return order.size(); }
};

/// Sorts positions by descending score; equal scores keep ascending position.
inline RankedSentences rank_by_score(std::span<const double> scores) {
  RankedSentences r;
  r.order.resize(scores.size());
  std::iota(r.order.begin(), r.order.end(), std::size_t{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  r.scores.reserve(scores.size());
  for (std::size_t pos : r.order) r.scores.push_back(scores[pos]);
  return r;
}

inline RankedSentences rank(const HitsState& state) { return rank_by_score(state.hub); }

// ---------------------------------------------------------------------------
// Hub / authority structure

struct AuthorityEntry {
  std::size_t position = 0;
  std::string text;
  GoldLabel label = GoldLabel::Unlabeled;
  double auth_score = 0.0;
  double edge_weight = 0.0;
};

struct HubEntry {
  std::size_t position = 0;
  std::string text;
  GoldLabel label = GoldLabel::Unlabeled;
  double hub_score = 0.0;
  std::vector<AuthorityEntry> authorities;
};

struct HubAuthorityReport {
  std::string document_id;
  std::vector<HubEntry> hubs;
};

/// For each of the top_hubs best hubs, the top_auths other sentences ordered
/// by their contribution W[hub][j] * A_j to that hub's score.
inline HubAuthorityReport hub_authority_report(const HitsState& state, const SentenceGraph& graph,
                                               const AnnotatedDocument& doc, std::size_t top_hubs,
                                               std::size_t top_auths) {
  const std::size_t n = graph.size();
  detail::require(state.hub.size() == n && state.auth.size() == n && doc.size() == n,
                  "hub_authority_report: state, graph and document sizes differ");
  HubAuthorityReport report;
  report.document_id = doc.id;

  const RankedSentences ranked = rank(state);
  for (std::size_t r = 0; r < std::min(top_hubs, n); ++r) {
    const std::size_t h = ranked.order[r];
    HubEntry entry{h, doc.sentences[h].text, doc.sentences[h].label, state.hub[h], {}};

    std::vector<double> contribution(n);
    for (std::size_t j = 0; j < n; ++j) contribution[j] = graph.at(h, j) * state.auth[j];
    const RankedSentences by_contrib = rank_by_score(contribution);
    for (std::size_t j : by_contrib.order) {
      if (entry.authorities.size() == top_auths) break;
      if (j == h) continue;
      entry.authorities.push_back({j, doc.sentences[j].text, doc.sentences[j].label, state.auth[j], graph.at(h, j)});
    }
    report.hubs.push_back(std::move(entry));
  }
  return report;
}

}  // namespace ophits
