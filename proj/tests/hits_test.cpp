#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <regex>

#include "ophits/hits.hpp"
#include "ophits/report.hpp"
#include "test_support.hpp"

using namespace ophits;
using ophits_test::make_document;
using ophits_test::make_sentence;
using ophits_test::to_graph;

namespace {

double l2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

TEST(EdgeWeight, DefaultParamsHandValue) {
  // 0.8^3 * 0.5^2 * (1 + 1/2) = 0.512 * 0.25 * 1.5
  EXPECT_NEAR(edge_weight(0.8, 0.5, 2, WeightParams{}), 0.192, 1e-12);
}

TEST(EdgeWeight, DegenerateCases) {
  EXPECT_EQ(edge_weight(0.9, 0.0, 1, WeightParams{}), 0.0);
  EXPECT_EQ(edge_weight(0.1, 0.0, 7, WeightParams{}), 0.0);
  const WeightParams zero{0.0, 0.0, 0.0};
  EXPECT_EQ(edge_weight(0.37, 0.42, 1, zero), 1.0);
  WeightParams no_distance;
  no_distance.use_distance = false;
  EXPECT_NEAR(edge_weight(0.5, 0.5, 3, no_distance), 0.125 * 0.25, 1e-15);
}

TEST(BuildGraph, AsymmetryFollowsPriorRatio) {
  const auto doc = make_document("d", {make_sentence({"tax", "plan"}), make_sentence({"tax", "cut"})});
  const auto space = vectorize(doc);
  const std::vector<double> priors = {0.9, 0.1};
  const SentenceGraph g = build_graph(doc, priors, space);
  EXPECT_EQ(g.at(0, 0), 0.0);
  EXPECT_EQ(g.at(1, 1), 0.0);
  EXPECT_GT(g.at(0, 1), 0.0);
  EXPECT_NEAR(g.at(0, 1) / g.at(1, 0), 729.0, 1e-9);
}

TEST(BuildGraph, MatchesFormulaEntrywise) {
  const auto doc = make_document("d", {make_sentence({"a", "b", "c"}), make_sentence({"b", "c", "d"}),
                                       make_sentence({"x"}), make_sentence({"a", "d", "x"})});
  const auto space = vectorize(doc);
  const std::vector<double> priors = {0.2, 0.7, 0.5, 0.9};
  const WeightParams p{2.0, 1.5, 0.4};
  const SentenceGraph g = build_graph(doc, priors, space, p);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) {
        EXPECT_EQ(g.at(i, j), 0.0);
        continue;
      }
      const double sim = cosine_sim(space.vectors[i], space.vectors[j]);
      const double d = std::abs(static_cast<double>(i) - static_cast<double>(j));
      EXPECT_NEAR(g.at(i, j), std::pow(priors[i], 2.0) * std::pow(sim, 1.5) * (0.4 + 1.0 / d), 1e-15);
      EXPECT_GE(g.at(i, j), 0.0);
    }
  EXPECT_EQ(g.at(0, 2), 0.0);  // disjoint vocabulary
}

TEST(BuildGraph, ContractViolations) {
  const auto doc = make_document("d", {make_sentence({"a"}), make_sentence({"b"})});
  const auto space = vectorize(doc);
  const std::vector<double> short_priors = {0.5};
  EXPECT_THROW(build_graph(doc, short_priors, space), ContractViolation);
  const std::vector<double> bad_priors = {0.5, 1.0};
  EXPECT_THROW(build_graph(doc, bad_priors, space), ContractViolation);
}

TEST(RunHits, ZeroGraphAnnihilatesInOneIteration) {
  const SentenceGraph g(3);
  const std::vector<double> priors = {0.2, 0.5, 0.9};
  const HitsState st = run_hits(g, priors, 0.01, 100);
  EXPECT_TRUE(st.converged);
  EXPECT_EQ(st.iterations, 1u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(st.hub[i], 0.0);
    EXPECT_EQ(st.auth[i], 0.0);
  }
}

TEST(RunHits, SingleEdgeConcentratesMass) {
  // H(1) = (1 * A_1(0), 0) = (0.9, 0) -> (1, 0); A(1) = (0, 1 * H_0(0)) -> (0, 1); fixed point.
  SentenceGraph g(2);
  g.at(0, 1) = 1.0;
  const std::vector<double> priors = {0.9, 0.1};
  const HitsState st = run_hits(g, priors, 1e-9, 100);
  EXPECT_TRUE(st.converged);
  EXPECT_EQ(st.iterations, 2u);
  EXPECT_NEAR(st.hub[0], 1.0, 1e-15);
  EXPECT_NEAR(st.hub[1], 0.0, 1e-15);
  EXPECT_NEAR(st.auth[0], 0.0, 1e-15);
  EXPECT_NEAR(st.auth[1], 1.0, 1e-15);
  EXPECT_EQ(st.trace.back(), 0.0);
}

TEST(RunHits, TraceIsJointMeanSquaredChange) {
  SentenceGraph g(2);
  g.at(0, 1) = 1.0;
  const std::vector<double> priors = {0.9, 0.1};
  const HitsState st = run_hits(g, priors, 1e-9, 1);
  // (0.1^2 + 0.1^2 + 0.1^2 + 0.1^2) / 4 after the first update from (0.9, 0.1) / (0.1, 0.9)
  ASSERT_EQ(st.trace.size(), 1u);
  EXPECT_NEAR(st.trace[0], 0.01, 1e-15);
  EXPECT_FALSE(st.converged);
}

TEST(RunHits, ReportsNonConvergence) {
  std::mt19937 rng(1);
  const auto inst = ophits_test::random_instance(rng, 6);
  const HitsState st = run_hits(to_graph(inst.weights), inst.priors, 1e-300, 3);
  EXPECT_FALSE(st.converged);
  EXPECT_EQ(st.iterations, 3u);
  EXPECT_EQ(st.trace.size(), 3u);
}

TEST(RunHitsProperty, NormalizedNonNegativeEveryIteration) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = ophits_test::random_instance(rng, 3 + rng() % 10);
    const SentenceGraph g = to_graph(inst.weights);
    for (std::size_t k = 1; k <= 6; ++k) {
      const HitsState st = run_hits(g, inst.priors, 1e-300, k);
      EXPECT_NEAR(l2(st.hub), 1.0, 1e-12);
      EXPECT_NEAR(l2(st.auth), 1.0, 1e-12);
      for (double h : st.hub) EXPECT_GE(h, 0.0);
      for (double a : st.auth) EXPECT_GE(a, 0.0);
    }
  }
}

TEST(RunHitsProperty, AgreesWithEigenvectorOracle) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 10;
    const auto inst = ophits_test::random_instance(rng, n);
    const HitsState st = run_hits(to_graph(inst.weights), inst.priors, 1e-24, 100000);
    ASSERT_TRUE(st.converged);
    const auto oracle = ophits_test::principal_hub_vector(inst.weights, inst.priors);
    EXPECT_TRUE(ophits_test::agrees_where_separated(rank(st).order, oracle)) << "trial " << trial;
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(st.hub[i], oracle[i], 1e-8);
  }
}

TEST(RunHitsProperty, RankingIsScaleInvariant) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = ophits_test::random_instance(rng, 3 + rng() % 10);
    const SentenceGraph g = to_graph(inst.weights);
    const auto base = rank(run_hits(g, inst.priors)).order;
    for (double c : {1e-3, 1.0, 1e3}) EXPECT_EQ(rank(run_hits(g.scaled(c), inst.priors)).order, base);
  }
}

TEST(RunHitsProperty, ConvergesQuicklyAtDefaultEpsilon) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = ophits_test::random_instance(rng, 3 + rng() % 10);
    const HitsState st = run_hits(to_graph(inst.weights), inst.priors, 0.01, 200);
    EXPECT_TRUE(st.converged);
  }
}

TEST(Rank, SortsDescendingWithPositionTieBreak) {
  HitsState st;
  st.hub = {0.1, 0.9, 0.3};
  EXPECT_EQ(rank(st).order, (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_EQ(rank(st).scores, (std::vector<double>{0.9, 0.3, 0.1}));
  st.hub = {0.5, 0.5};
  EXPECT_EQ(rank(st).order, (std::vector<std::size_t>{0, 1}));
  st.hub = {0.25, 0.25, 0.25, 0.25};
  EXPECT_EQ(rank(st).order, (std::vector<std::size_t>{0, 1, 2, 3}));
}

namespace {

AnnotatedDocument six_sentence_doc() {
  std::vector<Sentence> s;
  for (int i = 0; i < 6; ++i)
    s.push_back(make_sentence({"w" + std::to_string(i)}, 0, i % 2 ? GoldLabel::Factual : GoldLabel::Opinionated));
  return make_document("six", std::move(s));
}

}  // namespace

TEST(HubAuthorityReport, Cardinality) {
  std::mt19937 rng(4);
  const auto inst = ophits_test::random_instance(rng, 6);
  const SentenceGraph g = to_graph(inst.weights);
  const HitsState st = run_hits(g, inst.priors);
  const auto report = hub_authority_report(st, g, six_sentence_doc(), 1, 4);
  ASSERT_EQ(report.hubs.size(), 1u);
  EXPECT_EQ(report.hubs[0].authorities.size(), 4u);
  EXPECT_EQ(report.hubs[0].position, rank(st).order[0]);
  for (const auto& a : report.hubs[0].authorities) EXPECT_NE(a.position, report.hubs[0].position);
}

TEST(HubAuthorityReport, TruncatesOnShortDocuments) {
  SentenceGraph g(2);
  g.at(0, 1) = 1.0;
  g.at(1, 0) = 0.5;
  const std::vector<double> priors = {0.6, 0.4};
  const auto doc = make_document("two", {make_sentence({"a"}), make_sentence({"b"})});
  const auto report = hub_authority_report(run_hits(g, priors), g, doc, 5, 4);
  ASSERT_EQ(report.hubs.size(), 2u);
  EXPECT_EQ(report.hubs[0].authorities.size(), 1u);
}

TEST(HubAuthorityReport, AuthoritiesOrderedByWeightedContribution) {
  // Hub 0 links to 1..5; contributions W[0][j] * A_j enumerated below.
  SentenceGraph g(6);
  const std::vector<double> w0 = {0.0, 0.9, 0.2, 0.8, 0.5, 0.1};
  for (std::size_t j = 0; j < 6; ++j) g.at(0, j) = w0[j];
  HitsState st;
  st.hub = {0.9, 0.1, 0.1, 0.1, 0.1, 0.1};
  st.auth = {0.0, 0.3, 0.6, 0.7, 0.2, 0.5};
  // 1: 0.27, 2: 0.12, 3: 0.56, 4: 0.10, 5: 0.05
  std::vector<std::size_t> expected = {1, 2, 3, 4, 5};
  std::sort(expected.begin(), expected.end(),
            [&](std::size_t a, std::size_t b) { return w0[a] * st.auth[a] > w0[b] * st.auth[b]; });
  ASSERT_EQ(expected.front(), 3u);

  const auto report = hub_authority_report(st, g, six_sentence_doc(), 1, 4);
  ASSERT_EQ(report.hubs[0].position, 0u);
  const auto& auths = report.hubs[0].authorities;
  ASSERT_EQ(auths.size(), 4u);
  for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(auths[r].position, expected[r]);
  EXPECT_DOUBLE_EQ(auths[0].edge_weight, 0.8);
  EXPECT_DOUBLE_EQ(auths[0].auth_score, 0.7);
  EXPECT_EQ(auths[0].label, GoldLabel::Factual);
}

TEST(HubAuthorityReport, JsonAndDotExport) {
  std::mt19937 rng(8);
  const auto inst = ophits_test::random_instance(rng, 6);
  const SentenceGraph g = to_graph(inst.weights);
  auto doc = six_sentence_doc();
  const HitsState st = run_hits(g, inst.priors);
  doc.sentences[rank(st).order[0]].text = "He said \"no\" \\ twice";
  const auto report = hub_authority_report(st, g, doc, 2, 3);

  const auto j = to_json(report);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_TRUE(j[0]["hub"].contains("hub_score"));
  EXPECT_EQ(j[0]["authorities"].size(), 3u);
  for (const char* key : {"position", "text", "label", "auth_score", "edge_weight"})
    EXPECT_TRUE(j[0]["authorities"][0].contains(key)) << key;

  const std::string dot = to_dot(report);
  EXPECT_EQ(dot.rfind("digraph \"six\" {", 0), 0u);
  EXPECT_EQ(dot.substr(dot.size() - 2), "}\n");
  EXPECT_NE(dot.find("He said \\\"no\\\" \\\\ twice"), std::string::npos) << dot;
  const std::regex edge(R"(  s\d+ -> s\d+ \[label="[^"]*"\];)");
  std::size_t edges = 0;
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator(); ++it) ++edges;
  EXPECT_EQ(edges, 6u);
}
