#pragma once

#include <string>

#include "ophits/corpus.hpp"

namespace ophits {

enum class Polarity { Positive = 0, Negative = 1, Neutral = 2 };

inline const char* to_string(Polarity p) {
  switch (p) {
    case Polarity::Positive: return "positive";
    case Polarity::Negative: return "negative";
    case Polarity::Neutral: break;
  }
  return "neutral";
}

/// Local sentence features used by the first-stage classifier: polar word
/// counts, root polarity, and presence of acomp / xcomp / advmod arcs.
struct FeatureVector {
  int pos_count = 0;
  int neg_count = 0;
  Polarity root_polarity = Polarity::Neutral;
  bool has_acomp = false;
  bool has_xcomp = false;
  bool has_advmod = false;

  bool operator==(const FeatureVector&) const = default;
};

/// Lexicon lookup key for a token: its lemma, or the surface form when the
/// lemma is missing, lowercased either way.
inline std::string match_key(const Token& t) {
  return to_lower(t.lemma.empty() ? t.surface : t.lemma);
}

inline Polarity polarity_of(const Token& t, const Lexicon& lex) {
  const auto key = match_key(t);
  if (lex.is_positive(key)) return Polarity::Positive;
  if (lex.is_negative(key)) return Polarity::Negative;
  return Polarity::Neutral;
}

inline FeatureVector extract(const Sentence& s, const Lexicon& lex) {
  FeatureVector fv;
  for (const auto& t : s.tokens) {
    switch (polarity_of(t, lex)) {
      case Polarity::Positive: ++fv.pos_count; break;
      case Polarity::Negative: ++fv.neg_count; break;
      case Polarity::Neutral: break;
    }
  }
  if (const int root = s.root_token(); root >= 0) fv.root_polarity = polarity_of(s.tokens[root], lex);
  for (const auto& arc : s.arcs) {
    const auto rel = to_lower(arc.relation);
    if (rel == "acomp") fv.has_acomp = true;
    else if (rel == "xcomp") fv.has_xcomp = true;
    else if (rel == "advmod") fv.has_advmod = true;
  }
  return fv;
}

}  // namespace ophits
