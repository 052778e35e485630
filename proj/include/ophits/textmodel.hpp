#pragma once

// Per-article TF-IDF sentence vectors and the similarity / distance terms of
// the edge-weight function.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ophits/corpus.hpp"
#include "ophits/error.hpp"

namespace ophits {

/// Sparse term -> weight map. Only strictly positive weights are stored.
struct SentenceVector {
  std::map<std::string, double> weights;

  bool empty() const { return weights.empty(); }
};

struct ArticleVectorSpace {
  std::vector<SentenceVector> vectors;
  std::set<std::string> vocabulary;
};

/// Tokens made only of punctuation carry no term.
inline bool is_punctuation(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::ispunct(c) != 0; });
}

inline std::vector<std::string> sentence_terms(const Sentence& s) {
  std::vector<std::string> terms;
  terms.reserve(s.tokens.size());
  for (const auto& t : s.tokens)
    if (!is_punctuation(t.surface)) terms.push_back(to_lower(t.surface));
  return terms;
}

/// tf = raw count in the sentence, idf = ln((1+n)/(1+df)) + 1 with df counted
/// over the sentences of this document only.
inline ArticleVectorSpace vectorize(const AnnotatedDocument& doc) {
  const std::size_t n = doc.size();
  detail::require(n >= 1, "vectorize: document has no sentences");

  std::vector<std::map<std::string, int>> tf(n);
  std::map<std::string, int> df;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& term : sentence_terms(doc.sentences[i])) ++tf[i][term];
    for (const auto& [term, _] : tf[i]) ++df[term];
  }

  ArticleVectorSpace space;
  space.vectors.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [term, count] : tf[i]) {
      const double idf = std::log((1.0 + n) / (1.0 + df.at(term))) + 1.0;
      space.vectors[i].weights.emplace(term, count * idf);
    }
  }
  for (const auto& [term, _] : df) space.vocabulary.insert(term);
  return space;
}

inline double norm(const SentenceVector& v) {
  double sq = 0.0;
  for (const auto& [_, w] : v.weights) sq += w * w;
  return std::sqrt(sq);
}

/// Cosine of two sparse vectors; 0 when either is empty. Result is clamped to
/// [0,1] so rounding never pushes identical vectors past 1.
inline double cosine_sim(const SentenceVector& a, const SentenceVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  // Walk both sorted maps in lockstep, so the dot product accumulates in term
  // order whichever argument comes first.
  double dot = 0.0;
  auto ia = a.weights.begin();
  auto ib = b.weights.begin();
  while (ia != a.weights.end() && ib != b.weights.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  const double denom = norm(a) * norm(b);
  if (denom == 0.0) return 0.0;
  return std::clamp(dot / denom, 0.0, 1.0);
}

/// Number of sentences separating positions i and j; adjacent sentences are 1 apart.
inline int sentence_distance(int i, int j) {
  detail::require(i != j, "sentence_distance: self-distance is undefined");
  return std::abs(i - j);
}

}  // namespace ophits
