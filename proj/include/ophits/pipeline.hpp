#pragma once

// End-to-end processing of one article: classifier priors, TF-IDF space,
// weighted graph, HITS, ranking.

#include <cstddef>
#include <vector>

#include "ophits/classifier.hpp"
#include "ophits/corpus.hpp"
#include "ophits/hits.hpp"
#include "ophits/textmodel.hpp"

namespace ophits {

struct HitsConfig {
  WeightParams params;
  double epsilon = kDefaultEpsilon;
  std::size_t max_iter = kDefaultMaxIter;
};

struct ArticleRun {
  std::vector<double> priors;
  SentenceGraph graph;
  HitsState state;
  RankedSentences hits_ranking;
  RankedSentences nb_ranking;
};

inline ArticleRun run_article(const AnnotatedDocument& doc, const Lexicon& lex, const NBModel& model,
                              const HitsConfig& cfg = {}) {
  ArticleRun run;
  run.priors = sentence_priors(model, doc, lex);
  const ArticleVectorSpace space = vectorize(doc);
  run.graph = build_graph(doc, run.priors, space, cfg.params);
  run.state = run_hits(run.graph, run.priors, cfg.epsilon, cfg.max_iter);
  run.hits_ranking = rank(run.state);
  run.nb_ranking = rank_by_score(run.priors);
  return run;
}

}  // namespace ophits
