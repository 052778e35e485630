#pragma once

// Data model for annotated news articles and polar-word lexicons, plus the
// JSONL / plain-text loaders.
//
// Corpus line format:
//   {"id": str,
//    "sentences": [{"text": str,
//                   "tokens": [{"surface": str, "lemma": str?}],
//                   "arcs": [{"rel": str, "head": int|-1, "dep": int}],
//                   "label": "opinion"|"fact"|null}]}
// head == -1 is the ROOT sentinel.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "ophits/error.hpp"

namespace ophits {

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

struct Token {
  std::string surface;
  std::string lemma;
  int index = 0;

  bool operator==(const Token&) const = default;
};

struct DependencyArc {
  static constexpr int kRoot = -1;

  std::string relation;  // stored lowercase
  int head = kRoot;
  int dependent = 0;

  bool operator==(const DependencyArc&) const = default;
};

enum class GoldLabel { Opinionated, Factual, Unlabeled };

struct Sentence {
  std::string text;
  std::vector<Token> tokens;
  std::vector<DependencyArc> arcs;
  GoldLabel label = GoldLabel::Unlabeled;
  int position = 0;

  bool operator==(const Sentence&) const = default;

  /// Index of the token attached to ROOT, or -1 when the sentence has no arcs.
  int root_token() const {
    for (const auto& arc : arcs)
      if (arc.head == DependencyArc::kRoot && to_lower(arc.relation) == "root") return arc.dependent;
    return -1;
  }
};

struct AnnotatedDocument {
  std::string id;
  std::vector<Sentence> sentences;

  std::size_t size() const { return sentences.size(); }
  bool operator==(const AnnotatedDocument&) const = default;
};

enum class Split { Train, Test, Unsplit };

struct Corpus {
  std::vector<AnnotatedDocument> documents;
  Split split = Split::Unsplit;

  bool operator==(const Corpus&) const = default;
};

struct Lexicon {
  std::set<std::string> positive;
  std::set<std::string> negative;

  bool is_positive(const std::string& w) const { return positive.count(w) != 0; }
  bool is_negative(const std::string& w) const { return negative.count(w) != 0; }
};

// ---------------------------------------------------------------------------
// Validation

namespace detail {

[[noreturn]] inline void invalid(const std::string& doc_id, int position, const std::string& msg) {
  std::ostringstream os;
  os << "document '" << doc_id << "'";
  if (position >= 0) os << ", sentence " << position;
  os << ": " << msg;
  throw InputError(os.str());
}

}  // namespace detail

/// Checks every Sentence/AnnotatedDocument invariant. Throws InputError
/// naming the document id and sentence position of the first violation.
inline void validate(const AnnotatedDocument& doc) {
  if (doc.sentences.empty()) detail::invalid(doc.id, -1, "document has no sentences");
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence& sent = doc.sentences[s];
    const int pos = static_cast<int>(s);
    if (sent.position != pos) detail::invalid(doc.id, pos, "position out of order");
    const int ntok = static_cast<int>(sent.tokens.size());
    for (int t = 0; t < ntok; ++t) {
      if (sent.tokens[t].surface.empty()) detail::invalid(doc.id, pos, "empty token surface");
      if (sent.tokens[t].index != t) detail::invalid(doc.id, pos, "token indices not contiguous");
    }
    int roots = 0;
    for (const auto& arc : sent.arcs) {
      if (arc.dependent < 0 || arc.dependent >= ntok)
        detail::invalid(doc.id, pos, "arc dependent " + std::to_string(arc.dependent) + " out of range");
      if (arc.head != DependencyArc::kRoot && (arc.head < 0 || arc.head >= ntok))
        detail::invalid(doc.id, pos, "arc head " + std::to_string(arc.head) + " out of range");
      const bool is_root = to_lower(arc.relation) == "root";
      if (is_root != (arc.head == DependencyArc::kRoot))
        detail::invalid(doc.id, pos, "only the root arc may (and must) attach to ROOT");
      roots += is_root ? 1 : 0;
    }
    // An unparsed sentence carries no arcs at all; otherwise exactly one root.
    if (!sent.arcs.empty() && roots != 1)
      detail::invalid(doc.id, pos, "expected exactly one root arc, found " + std::to_string(roots));
  }
}

inline void validate(const Corpus& corpus) {
  std::unordered_set<std::string> seen;
  for (const auto& doc : corpus.documents) {
    if (!seen.insert(doc.id).second) detail::invalid(doc.id, -1, "duplicate document id");
    validate(doc);
  }
}

// ---------------------------------------------------------------------------
// JSON mapping

inline nlohmann::json to_json(const AnnotatedDocument& doc) {
  nlohmann::json sents = nlohmann::json::array();
  for (const auto& s : doc.sentences) {
    nlohmann::json toks = nlohmann::json::array();
    for (const auto& t : s.tokens) toks.push_back({{"surface", t.surface}, {"lemma", t.lemma}});
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& a : s.arcs) arcs.push_back({{"rel", a.relation}, {"head", a.head}, {"dep", a.dependent}});
    nlohmann::json label;
    if (s.label == GoldLabel::Opinionated) label = "opinion";
    else if (s.label == GoldLabel::Factual) label = "fact";
    sents.push_back({{"text", s.text}, {"tokens", toks}, {"arcs", arcs}, {"label", label}});
  }
  return {{"id", doc.id}, {"sentences", sents}};
}

/// Builds a document from one parsed JSONL record. Structural schema errors
/// throw InputError; semantic invariants are left to validate().
inline AnnotatedDocument document_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("record is not a JSON object");
  if (!j.contains("id") || !j["id"].is_string()) throw InputError("missing string field 'id'");
  AnnotatedDocument doc;
  doc.id = j["id"].get<std::string>();
  if (!j.contains("sentences") || !j["sentences"].is_array())
    detail::invalid(doc.id, -1, "missing array field 'sentences'");

  int pos = 0;
  for (const auto& js : j["sentences"]) {
    Sentence s;
    s.position = pos;
    if (!js.is_object()) detail::invalid(doc.id, pos, "sentence is not an object");
    s.text = js.value("text", std::string{});
    if (js.contains("tokens")) {
      if (!js["tokens"].is_array()) detail::invalid(doc.id, pos, "'tokens' is not an array");
      int idx = 0;
      for (const auto& jt : js["tokens"]) {
        if (!jt.is_object() || !jt.contains("surface") || !jt["surface"].is_string())
          detail::invalid(doc.id, pos, "token without string 'surface'");
        Token t;
        t.surface = jt["surface"].get<std::string>();
        if (jt.contains("lemma") && jt["lemma"].is_string() && !jt["lemma"].get<std::string>().empty())
          t.lemma = jt["lemma"].get<std::string>();
        else
          t.lemma = to_lower(t.surface);
        t.index = idx++;
        s.tokens.push_back(std::move(t));
      }
    }
    if (js.contains("arcs")) {
      if (!js["arcs"].is_array()) detail::invalid(doc.id, pos, "'arcs' is not an array");
      for (const auto& ja : js["arcs"]) {
        if (!ja.is_object() || !ja.contains("rel") || !ja["rel"].is_string() || !ja.contains("head") ||
            !ja["head"].is_number_integer() || !ja.contains("dep") || !ja["dep"].is_number_integer())
          detail::invalid(doc.id, pos, "arc needs string 'rel' and integer 'head'/'dep'");
        s.arcs.push_back({to_lower(ja["rel"].get<std::string>()), ja["head"].get<int>(), ja["dep"].get<int>()});
      }
    }
    const auto label = js.find("label");
    if (label == js.end() || label->is_null()) {
      s.label = GoldLabel::Unlabeled;
    } else if (label->is_string() && *label == "opinion") {
      s.label = GoldLabel::Opinionated;
    } else if (label->is_string() && *label == "fact") {
      s.label = GoldLabel::Factual;
    } else {
      detail::invalid(doc.id, pos, "label must be \"opinion\", \"fact\" or null");
    }
    doc.sentences.push_back(std::move(s));
    ++pos;
  }
  return doc;
}

inline Corpus parse_corpus(std::istream& in, Split split = Split::Unsplit) {
  Corpus corpus;
  corpus.split = split;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError("line " + std::to_string(lineno) + ": malformed JSON: " + e.what());
    }
    corpus.documents.push_back(document_from_json(j));
  }
  validate(corpus);
  return corpus;
}

inline Corpus load_corpus(const std::filesystem::path& path, Split split = Split::Unsplit) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open corpus file " + path.string());
  return parse_corpus(in, split);
}

inline void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& doc : corpus.documents) out << to_json(doc).dump() << '\n';
}

// ---------------------------------------------------------------------------
// Lexicon

inline std::set<std::string> read_word_list(std::istream& in) {
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r\n");
    words.insert(to_lower(std::string_view(line).substr(first, last - first + 1)));
  }
  return words;
}

inline Lexicon make_lexicon(std::set<std::string> positive, std::set<std::string> negative) {
  for (const auto& w : positive)
    if (negative.count(w)) throw InputError("lexicon word '" + w + "' is listed as both positive and negative");
  return Lexicon{std::move(positive), std::move(negative)};
}

inline Lexicon load_lexicon(const std::filesystem::path& pos_path, const std::filesystem::path& neg_path) {
  std::ifstream pos(pos_path);
  if (!pos) throw InputError("cannot open lexicon file " + pos_path.string());
  std::ifstream neg(neg_path);
  if (!neg) throw InputError("cannot open lexicon file " + neg_path.string());
  return make_lexicon(read_word_list(pos), read_word_list(neg));
}

}  // namespace ophits
