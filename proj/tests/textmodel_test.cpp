#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ophits/textmodel.hpp"
#include "test_support.hpp"

using namespace ophits;
using ophits_test::make_document;
using ophits_test::make_sentence;

TEST(Vectorize, SingleSentenceWeightsAreOne) {
  // idf = ln(2/2) + 1 = 1, tf = 1
  const auto doc = make_document("d", {make_sentence({"a", "b"})});
  const auto space = vectorize(doc);
  ASSERT_EQ(space.vectors.size(), 1u);
  EXPECT_DOUBLE_EQ(space.vectors[0].weights.at("a"), 1.0);
  EXPECT_DOUBLE_EQ(space.vectors[0].weights.at("b"), 1.0);
}

TEST(Vectorize, UbiquitousTermHasUnitIdf) {
  const auto doc = make_document("d", {make_sentence({"tax", "x"}), make_sentence({"tax", "y"}),
                                       make_sentence({"Tax", "tax", "z"})});
  const auto space = vectorize(doc);
  EXPECT_DOUBLE_EQ(space.vectors[0].weights.at("tax"), 1.0);
  EXPECT_DOUBLE_EQ(space.vectors[2].weights.at("tax"), 2.0);  // tf 2, case folded
  // df = 1 of n = 3: ln(4/2) + 1
  EXPECT_NEAR(space.vectors[0].weights.at("x"), std::log(2.0) + 1.0, 1e-15);
}

TEST(Vectorize, PunctuationDroppedAndEmptySentenceIsEmpty) {
  const auto doc = make_document("d", {make_sentence({".", ",", "--"}), make_sentence({"word", "."})});
  const auto space = vectorize(doc);
  EXPECT_TRUE(space.vectors[0].empty());
  EXPECT_EQ(space.vectors[1].weights.size(), 1u);
  EXPECT_EQ(space.vocabulary, std::set<std::string>{"word"});
}

TEST(CosineSim, HandComputedCases) {
  SentenceVector a{{{"x", 1.0}}};
  SentenceVector b{{{"x", 1.0}, {"y", 1.0}}};
  SentenceVector c{{{"z", 3.0}}};
  // 1 / (1 * sqrt 2)
  EXPECT_NEAR(cosine_sim(a, b), 0.70710678118654752, 1e-15);
  EXPECT_NEAR(cosine_sim(b, b), 1.0, 1e-12);
  EXPECT_EQ(cosine_sim(a, c), 0.0);
  EXPECT_EQ(cosine_sim(a, SentenceVector{}), 0.0);
  EXPECT_EQ(cosine_sim(SentenceVector{}, SentenceVector{}), 0.0);
}

TEST(CosineSimProperty, SymmetricBoundedScaleInvariant) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> weight(0.01, 5.0);
  const std::vector<std::string> terms = {"a", "b", "c", "d", "e", "f", "g"};
  auto random_vector = [&] {
    SentenceVector v;
    for (const auto& t : terms)
      if (rng() % 2) v.weights[t] = weight(rng);
    if (v.empty()) v.weights["a"] = weight(rng);
    return v;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_vector();
    const auto b = random_vector();
    const double ab = cosine_sim(a, b);
    EXPECT_EQ(ab, cosine_sim(b, a));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_NEAR(cosine_sim(a, a), 1.0, 1e-12);
    SentenceVector scaled = a;
    const double c = weight(rng) * 100.0;
    for (auto& [_, w] : scaled.weights) w *= c;
    EXPECT_NEAR(cosine_sim(scaled, b), ab, 1e-12);
  }
}

TEST(SentenceDistance, AbsoluteDifference) {
  EXPECT_EQ(sentence_distance(2, 5), 3);
  EXPECT_EQ(sentence_distance(5, 2), 3);
  EXPECT_EQ(sentence_distance(0, 1), 1);
  EXPECT_THROW(sentence_distance(4, 4), ContractViolation);
}
