// Writes the synthetic fixture corpora and lexicons under an output directory:
//
//   make_fixtures <outdir>
//     <outdir>/positive.txt, negative.txt   polar word lists
//     <outdir>/train.jsonl                   20 labeled training articles
//     <outdir>/test.jsonl                    20 labeled test articles
//
// Each article holds 2-4 opinionated hub sentences, each surrounded by 2-3
// factual sentences sharing its topic words, plus lexically isolated factual
// distractors. Some distractors carry opinion-like cues (polar words, advmod)
// so the local classifier alone is fooled by them. Output depends only on the
// fixed seeds below.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "ophits/corpus.hpp"

namespace {

using ophits::AnnotatedDocument;
using ophits::DependencyArc;
using ophits::GoldLabel;
using ophits::Sentence;
using ophits::Token;

const std::vector<std::string> kPositive = {
    "good",    "great",    "strong",  "wise",     "brilliant", "fair",    "honest",   "effective",
    "praised", "admirable", "bold",   "smart",    "sensible",  "welcome", "impressive", "hopeful",
};

const std::vector<std::string> kNegative = {
    "bad",       "terrible", "reckless", "absurd",  "slammed", "foolish",   "dangerous", "ridiculous",
    "shameful",  "weak",     "corrupt",  "failed",  "cynical", "disastrous", "awful",    "irresponsible",
};

const std::vector<std::string> kTopics = {
    "budget",    "deficit",   "tax",       "senate",   "immigration", "border",    "healthcare", "insurance",
    "pipeline",  "energy",    "tariff",    "trade",    "pension",     "veterans",  "military",   "drone",
    "election",  "ballot",    "subsidy",   "farm",     "climate",     "carbon",    "housing",    "mortgage",
    "education", "teachers",  "court",     "judge",    "police",      "reform",    "sanctions",  "embassy",
    "vaccine",   "hospital",  "highway",   "bridge",   "wages",       "union",     "oil",        "drilling",
    "debt",      "ceiling",   "lobbyists", "campaign", "filibuster",  "nominee",   "surveillance", "privacy",
};

// Words used only by distractor sentences; each distractor draws fresh ones.
const std::vector<std::string> kIsolated = {
    "weather",  "stadium",  "parade",   "festival", "museum",   "orchestra", "marathon", "harbor",
    "airport",  "zoo",      "library",  "garden",   "bakery",   "ferry",     "circus",   "glacier",
    "volcano",  "lighthouse", "chess",  "opera",    "cathedral", "carnival", "rodeo",    "aquarium",
    "vineyard", "canyon",   "regatta",  "quilt",    "tornado",  "comet",     "orchard",  "pottery",
    "telescope", "sculpture", "ballet", "monastery", "fossil",  "meadow",    "kayak",    "lantern",
    "tapestry", "waterfall", "bazaar",  "caravan",  "puppet",   "snowfall",  "reef",     "windmill",
};

// Article-wide theme words shared by every hub and support sentence.
const std::vector<std::string> kThemes = {
    "obama", "congress", "republicans", "democrats", "washington", "administration",
    "lawmakers", "governor", "president", "voters", "legislature", "capitol",
};

// General newswire vocabulary sprinkled into sentences to vary length and overlap.
const std::vector<std::string> kFiller = {
    "officials", "week",    "plan",     "state",    "year",     "federal", "public",  "national",
    "local",     "program", "proposal", "members",  "spokesman", "statement", "policy", "county",
    "residents", "month",   "funding",  "support",  "vote",     "bill",    "measure", "session",
    "leaders",   "staff",   "costs",    "process",  "review",   "meeting", "hearing", "draft",
};

const std::vector<std::string> kOpinionSubjects = {"critics", "supporters", "analysts", "opponents", "observers"};
const std::vector<std::string> kOpinionVerbs = {"argued", "insisted", "warned", "claimed", "believe"};
const std::vector<std::string> kAdverbs = {"clearly", "deeply", "simply", "truly", "frankly"};
const std::vector<std::string> kFactVerbs = {"reported", "announced", "approved", "scheduled", "released", "filed"};
const std::vector<std::string> kFactNouns = {"committee", "agency", "office", "report", "panel", "department"};
const std::vector<std::string> kDays = {"monday", "tuesday", "wednesday", "thursday", "friday"};

class Rng {
 public:
  explicit Rng(std::uint32_t seed) : gen_(seed) {}
  // Raw mt19937 output is fully specified by the standard, unlike the
  // distribution adaptors, so fixtures are identical on every toolchain.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
  bool chance(unsigned percent) { return below(100) < percent; }
  template <typename T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937 gen_;
};

/// Accumulates tokens and arcs; every non-root token is attached to the root.
class SentenceBuilder {
 public:
  SentenceBuilder& word(const std::string& w, const std::string& rel = "dep") {
    tokens_.push_back(w);
    rels_.push_back(rel);
    return *this;
  }
  SentenceBuilder& root(const std::string& w) { return word(w, "root"); }
  SentenceBuilder& filler(Rng& rng, std::size_t max_words) {
    const std::size_t k = rng.below(max_words + 1);
    for (std::size_t i = 0; i < k; ++i) word(rng.pick(kFiller), "dep");
    return *this;
  }

  Sentence build(GoldLabel label) const {
    Sentence s;
    s.label = label;
    int root = 0;
    for (std::size_t i = 0; i < rels_.size(); ++i)
      if (rels_[i] == "root") root = static_cast<int>(i);
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      s.tokens.push_back({tokens_[i], tokens_[i], static_cast<int>(i)});
      if (i > 0) s.text += ' ';
      s.text += tokens_[i];
      const int idx = static_cast<int>(i);
      if (rels_[i] == "root")
        s.arcs.push_back({"root", DependencyArc::kRoot, idx});
      else
        s.arcs.push_back({rels_[i], root, idx});
    }
    s.tokens.push_back({".", ".", static_cast<int>(tokens_.size())});
    s.arcs.push_back({"punct", root, static_cast<int>(tokens_.size())});
    s.text += " .";
    s.text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s.text[0])));
    return s;
  }

 private:
  std::vector<std::string> tokens_;
  std::vector<std::string> rels_;
};

struct Cluster {
  std::vector<std::string> topics;  // 4 topic words
  std::vector<std::string> themes;  // 2 article theme words
};

std::string polar(Rng& rng) { return rng.chance(50) ? rng.pick(kPositive) : rng.pick(kNegative); }

Sentence opinion_sentence(Rng& rng, const Cluster& c, bool strong) {
  SentenceBuilder b;
  b.word(rng.pick(kOpinionSubjects), "nsubj");
  // A polar root verb ("slammed", "praised") or a neutral opinion verb.
  if (strong && rng.chance(40))
    b.root(rng.chance(50) ? "slammed" : "praised");
  else
    b.root(rng.pick(kOpinionVerbs));
  b.word("the", "det").word(c.topics[0], "compound").word(c.topics[1], "nsubj").word("is", "cop");
  if (strong || rng.chance(30)) b.word(rng.pick(kAdverbs), "advmod");
  if (strong) b.word(polar(rng), "acomp");
  else b.word("questionable", "xcomp");
  b.word("for", "case").word(c.topics[2], "nmod");
  b.word("by", "case").word(c.themes[rng.below(2)], "nmod");
  if (strong && rng.chance(50)) b.word("and", "cc").word(polar(rng), "conj");
  b.filler(rng, 3);
  return b.build(GoldLabel::Opinionated);
}

Sentence support_sentence(Rng& rng, const Cluster& c) {
  SentenceBuilder b;
  const std::size_t first = rng.below(3);
  b.word("the", "det").word(c.topics[first], "compound").word(rng.pick(kFactNouns), "nsubj");
  b.root(rng.pick(kFactVerbs));
  b.word("new", "amod").word(c.topics[3], "dobj");
  b.word("on", "case").word(rng.pick(kDays), "nmod");
  b.word("for", "case").word(c.topics[(first + 1 + rng.below(2)) % 3], "nmod");
  b.word("with", "case").word(c.themes[0], "conj").word(c.themes[1], "conj");
  if (rng.chance(15)) b.word("quickly", "advmod");
  b.filler(rng, 3);
  return b.build(GoldLabel::Factual);
}

Sentence distractor_sentence(Rng& rng, std::size_t& isolated_cursor, const std::vector<std::string>& themes,
                             bool opinion_like) {
  auto fresh = [&] { return kIsolated[isolated_cursor++ % kIsolated.size()]; };
  SentenceBuilder b;
  b.word(fresh(), "compound").word(fresh(), "nsubj");
  b.word("near", "case").word(themes[rng.below(2)], "nmod");
  if (opinion_like) {
    b.root(rng.chance(50) ? "slammed" : "praised");
    b.word(rng.pick(kAdverbs), "advmod").word(polar(rng), "acomp");
  } else {
    b.root(rng.pick(kFactVerbs));
  }
  b.word(fresh(), "dobj");
  b.filler(rng, 3);
  return b.build(GoldLabel::Factual);
}

AnnotatedDocument make_article(Rng& rng, const std::string& id) {
  const std::size_t hubs = 2 + rng.below(3);
  const std::size_t distractors = 2 + rng.below(3);

  // Distinct topic words per cluster.
  std::vector<std::size_t> topic_order(kTopics.size());
  for (std::size_t i = 0; i < topic_order.size(); ++i) topic_order[i] = i;
  for (std::size_t i = topic_order.size() - 1; i > 0; --i) std::swap(topic_order[i], topic_order[rng.below(i + 1)]);

  std::vector<std::vector<Sentence>> blocks;
  std::size_t cursor = rng.below(kIsolated.size());
  const std::size_t theme = rng.below(kThemes.size());
  const std::vector<std::string> themes = {kThemes[theme], kThemes[(theme + 1 + rng.below(kThemes.size() - 1)) % kThemes.size()]};
  for (std::size_t h = 0; h < hubs; ++h) {
    Cluster c;
    for (std::size_t t = 0; t < 4; ++t) c.topics.push_back(kTopics[topic_order[4 * h + t]]);
    c.themes = themes;
    const std::size_t supports = 2 + rng.below(2);
    const std::size_t before = rng.below(2);
    std::vector<Sentence> block;
    for (std::size_t s = 0; s < before; ++s) block.push_back(support_sentence(rng, c));
    block.push_back(opinion_sentence(rng, c, rng.chance(75)));
    for (std::size_t s = before; s < supports; ++s) block.push_back(support_sentence(rng, c));
    blocks.push_back(std::move(block));
  }
  for (std::size_t d = 0; d < distractors; ++d)
    blocks.push_back({distractor_sentence(rng, cursor, themes, d < 2 || rng.chance(50))});
  for (std::size_t i = blocks.size() - 1; i > 0; --i) std::swap(blocks[i], blocks[rng.below(i + 1)]);

  AnnotatedDocument doc;
  doc.id = id;
  for (auto& block : blocks)
    for (auto& s : block) {
      s.position = static_cast<int>(doc.sentences.size());
      doc.sentences.push_back(std::move(s));
    }
  return doc;
}

void write_corpus(const std::filesystem::path& path, std::uint32_t seed, const std::string& prefix) {
  Rng rng(seed);
  ophits::Corpus corpus;
  for (int a = 0; a < 20; ++a) {
    const std::string id = prefix + (a < 10 ? "0" : "") + std::to_string(a);
    corpus.documents.push_back(make_article(rng, id));
  }
  ophits::validate(corpus);
  std::ofstream out(path, std::ios::binary);
  ophits::write_corpus(out, corpus);
}

void write_words(const std::filesystem::path& path, const std::string& header, const std::vector<std::string>& words) {
  std::ofstream out(path, std::ios::binary);
  out << "# " << header << '\n';
  for (const auto& w : words) out << w << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <outdir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  write_words(dir / "positive.txt", "positive polar words", kPositive);
  write_words(dir / "negative.txt", "negative polar words", kNegative);
  write_corpus(dir / "train.jsonl", 20140101u, "train-");
  write_corpus(dir / "test.jsonl", 20140601u, "test-");
  return 0;
}
