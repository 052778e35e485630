#pragma once

// Ranking evaluation: precision at k, opinion-ratio-normalized M@k, the
// NB-vs-HITS comparison and the edge-weight parameter sweep.

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ophits/classifier.hpp"
#include "ophits/corpus.hpp"
#include "ophits/error.hpp"
#include "ophits/hits.hpp"
#include "ophits/pipeline.hpp"

namespace ophits {

/// op(r) for r = 1..n: whether the sentence ranked r is gold-opinionated.
struct Judgment {
  std::vector<bool> op;

  std::size_t size() const { return op.size(); }
};

inline Judgment judge(const RankedSentences& ranked, const AnnotatedDocument& doc) {
  Judgment j;
  j.op.reserve(ranked.size());
  for (std::size_t pos : ranked.order) {
    const GoldLabel l = doc.sentences.at(pos).label;
    if (l == GoldLabel::Unlabeled)
      throw InputError("document '" + doc.id + "', sentence " + std::to_string(pos) +
                       ": evaluation needs gold labels");
    j.op.push_back(l == GoldLabel::Opinionated);
  }
  return j;
}

inline double precision_at_k(const Judgment& j, std::size_t k) {
  detail::require(k >= 1 && k <= j.size(), "precision_at_k: k out of range");
  std::size_t hits = 0;
  for (std::size_t r = 0; r < k; ++r) hits += j.op[r] ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(k);
}

/// P@k over min(k, n) ranks, so short articles are not charged for ranks they cannot fill.
inline double precision_at_cutoff(const Judgment& j, std::size_t k) {
  return precision_at_k(j, std::min(k, j.size()));
}

/// Fraction of opinionated sentences; nullopt when the article has none.
inline std::optional<double> ratio_op(const AnnotatedDocument& doc) {
  detail::require(doc.size() > 0, "ratio_op: empty document");
  std::size_t op = 0;
  for (const auto& s : doc.sentences) {
    if (s.label == GoldLabel::Unlabeled)
      throw InputError("document '" + doc.id + "', sentence " + std::to_string(s.position) +
                       ": evaluation needs gold labels");
    op += s.label == GoldLabel::Opinionated ? 1 : 0;
  }
  if (op == 0) return std::nullopt;
  return static_cast<double>(op) / static_cast<double>(doc.size());
}

inline double m_at_k(double p_at_k, double ratio) {
  detail::require(ratio > 0.0, "m_at_k: ratio must be positive");
  return p_at_k / ratio;
}

/// Sample Pearson correlation; nullopt if lengths differ, fewer than two
/// points, or either side has zero variance.
inline std::optional<double> pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) return std::nullopt;
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

/// 100 * (after - before) / before; nullopt when the baseline is zero.
inline std::optional<double> improvement_pct(double before, double after) {
  if (before == 0.0) return std::nullopt;
  return 100.0 * (after - before) / before;
}

// ---------------------------------------------------------------------------
// NB vs HITS comparison

struct SystemScores {
  double p3 = 0, p5 = 0;
  std::optional<double> m3, m5;  // absent when the article has no opinionated sentence
};

struct ArticleEval {
  std::string id;
  std::optional<double> ratio;
  SystemScores nb;
  SystemScores hits;
};

struct AggregateScores {
  double p3 = 0, p5 = 0;
  std::optional<double> m3, m5;
};

struct Improvement {
  std::optional<double> p3, p5, m3, m5;
};

struct EvalReport {
  std::vector<ArticleEval> per_article;
  AggregateScores nb;
  AggregateScores hits;
  Improvement improvement_pct;
  std::optional<double> pearson_p5;
  std::optional<double> pearson_m5;
  std::vector<std::string> warnings;
};

inline SystemScores score_ranking(const RankedSentences& ranked, const AnnotatedDocument& doc,
                                  std::optional<double> ratio) {
  const Judgment j = judge(ranked, doc);
  SystemScores s;
  s.p3 = precision_at_cutoff(j, 3);
  s.p5 = precision_at_cutoff(j, 5);
  if (ratio) {
    s.m3 = m_at_k(s.p3, *ratio);
    s.m5 = m_at_k(s.p5, *ratio);
  }
  return s;
}

namespace detail {

inline AggregateScores mean_scores(const std::vector<ArticleEval>& arts, SystemScores ArticleEval::*sys) {
  AggregateScores agg;
  if (arts.empty()) return agg;
  double m3 = 0, m5 = 0;
  std::size_t m_count = 0;
  for (const auto& a : arts) {
    const SystemScores& s = a.*sys;
    agg.p3 += s.p3;
    agg.p5 += s.p5;
    if (s.m3) {
      m3 += *s.m3;
      m5 += *s.m5;
      ++m_count;
    }
  }
  agg.p3 /= static_cast<double>(arts.size());
  agg.p5 /= static_cast<double>(arts.size());
  if (m_count > 0) {
    agg.m3 = m3 / static_cast<double>(m_count);
    agg.m5 = m5 / static_cast<double>(m_count);
  }
  return agg;
}

inline std::optional<double> opt_improvement(std::optional<double> before, std::optional<double> after) {
  if (!before || !after) return std::nullopt;
  return improvement_pct(*before, *after);
}

}  // namespace detail

inline EvalReport evaluate(const Corpus& corpus, const Lexicon& lex, const NBModel& model,
                           const HitsConfig& cfg = {}) {
  EvalReport report;
  for (const auto& doc : corpus.documents) {
    ArticleEval a;
    a.id = doc.id;
    a.ratio = ratio_op(doc);
    if (!a.ratio)
      report.warnings.push_back("article '" + doc.id + "' has no opinionated sentence; excluded from M@k");
    const ArticleRun run = run_article(doc, lex, model, cfg);
    a.nb = score_ranking(run.nb_ranking, doc, a.ratio);
    a.hits = score_ranking(run.hits_ranking, doc, a.ratio);
    report.per_article.push_back(std::move(a));
  }
  report.nb = detail::mean_scores(report.per_article, &ArticleEval::nb);
  report.hits = detail::mean_scores(report.per_article, &ArticleEval::hits);
  report.improvement_pct.p3 = improvement_pct(report.nb.p3, report.hits.p3);
  report.improvement_pct.p5 = improvement_pct(report.nb.p5, report.hits.p5);
  report.improvement_pct.m3 = detail::opt_improvement(report.nb.m3, report.hits.m3);
  report.improvement_pct.m5 = detail::opt_improvement(report.nb.m5, report.hits.m5);

  std::vector<double> nb_p5, hits_p5, nb_m5, hits_m5;
  for (const auto& a : report.per_article) {
    nb_p5.push_back(a.nb.p5);
    hits_p5.push_back(a.hits.p5);
    if (a.nb.m5) {
      nb_m5.push_back(*a.nb.m5);
      hits_m5.push_back(*a.hits.m5);
    }
  }
  report.pearson_p5 = pearson(nb_p5, hits_p5);
  report.pearson_m5 = pearson(nb_m5, hits_m5);
  return report;
}

// ---------------------------------------------------------------------------
// Weight-function sweep

struct GridEntry {
  std::string label;
  WeightParams params;
};

struct SweepRow {
  GridEntry entry;
  double mean_p5 = 0;
  std::optional<double> mean_m5;
};

inline std::vector<SweepRow> sweep(const Corpus& corpus, const Lexicon& lex, const NBModel& model,
                                   const std::vector<GridEntry>& grid, double epsilon = kDefaultEpsilon,
                                   std::size_t max_iter = kDefaultMaxIter) {
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const auto& g : grid) {
    const EvalReport r = evaluate(corpus, lex, model, HitsConfig{g.params, epsilon, max_iter});
    rows.push_back({g, r.hits.p5, r.hits.m5});
  }
  return rows;
}

/// Grid file: one setting per line, `label,hub_exp,sim_exp,alpha[,scale]`.
/// alpha `none` drops the distance factor. Blank lines and `#` comments are skipped.
inline std::vector<GridEntry> parse_grid(std::istream& in) {
  std::vector<GridEntry> grid;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      cells.push_back(b == std::string::npos ? std::string{} : cell.substr(b, e - b + 1));
    }
    auto bad = [&](const std::string& why) {
      return InputError("grid row " + std::to_string(lineno) + " ('" + line + "'): " + why);
    };
    if (cells.size() != 4 && cells.size() != 5) throw bad("expected label,hub_exp,sim_exp,alpha[,scale]");
    auto number = [&](const std::string& s, const char* what) {
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(s, &used);
      } catch (const std::exception&) {
        throw bad(std::string("invalid ") + what);
      }
      if (used != s.size() || !std::isfinite(v) || v < 0) throw bad(std::string("invalid ") + what);
      return v;
    };
    GridEntry g;
    g.label = cells[0];
    if (g.label.empty()) throw bad("empty label");
    g.params.hub_exp = number(cells[1], "hub_exp");
    g.params.sim_exp = number(cells[2], "sim_exp");
    if (cells[3] == "none") {
      g.params.use_distance = false;
      g.params.alpha = 0.0;
    } else {
      g.params.alpha = number(cells[3], "alpha");
    }
    if (cells.size() == 5) {
      g.params.scale = number(cells[4], "scale");
      if (g.params.scale <= 0) throw bad("scale must be positive");
    }
    grid.push_back(std::move(g));
  }
  return grid;
}

inline std::vector<GridEntry> load_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open grid file " + path.string());
  return parse_grid(in);
}

// ---------------------------------------------------------------------------
// Output

namespace detail {

inline nlohmann::json opt_json(std::optional<double> v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

inline std::string fixed(std::optional<double> v, int prec = 2, bool sign = false) {
  if (!v) return "n/a";
  std::ostringstream os;
  if (sign) os << std::showpos;
  os << std::fixed << std::setprecision(prec) << *v;
  return os.str();
}

inline nlohmann::json scores_json(const SystemScores& s) {
  return {{"P@3", s.p3}, {"P@5", s.p5}, {"M@3", opt_json(s.m3)}, {"M@5", opt_json(s.m5)}};
}

inline nlohmann::json scores_json(const AggregateScores& s) {
  return {{"P@3", s.p3}, {"P@5", s.p5}, {"M@3", opt_json(s.m3)}, {"M@5", opt_json(s.m5)}};
}

}  // namespace detail

inline nlohmann::json to_json(const EvalReport& r) {
  nlohmann::json arts = nlohmann::json::array();
  for (const auto& a : r.per_article)
    arts.push_back({{"id", a.id},
                    {"ratio_op", detail::opt_json(a.ratio)},
                    {"nb", detail::scores_json(a.nb)},
                    {"hits", detail::scores_json(a.hits)}});
  return {
      {"per_article", arts},
      {"aggregate", {{"nb", detail::scores_json(r.nb)}, {"hits", detail::scores_json(r.hits)}}},
      {"improvement_pct",
       {{"P@3", detail::opt_json(r.improvement_pct.p3)},
        {"P@5", detail::opt_json(r.improvement_pct.p5)},
        {"M@3", detail::opt_json(r.improvement_pct.m3)},
        {"M@5", detail::opt_json(r.improvement_pct.m5)}}},
      {"pearson", {{"P@5", detail::opt_json(r.pearson_p5)}, {"M@5", detail::opt_json(r.pearson_m5)}}},
      {"warnings", r.warnings},
  };
}

/// System comparison table: NB row, HITS row, improvement row, then correlations.
inline void write_table(std::ostream& out, const EvalReport& r) {
  auto row = [&](const std::string& name, const std::string& p5, const std::string& m5, const std::string& p3,
                 const std::string& m3) {
    out << std::left << std::setw(16) << name << std::right << std::setw(8) << p5 << std::setw(8) << m5
        << std::setw(8) << p3 << std::setw(8) << m3 << '\n';
  };
  row("System", "P@5", "M@5", "P@3", "M@3");
  row("NB Classifier", detail::fixed(r.nb.p5), detail::fixed(r.nb.m5), detail::fixed(r.nb.p3), detail::fixed(r.nb.m3));
  row("HITS", detail::fixed(r.hits.p5), detail::fixed(r.hits.m5), detail::fixed(r.hits.p3),
      detail::fixed(r.hits.m3));
  row("Imp. (%)", detail::fixed(r.improvement_pct.p5, 1, true), detail::fixed(r.improvement_pct.m5, 1, true),
      detail::fixed(r.improvement_pct.p3, 1, true), detail::fixed(r.improvement_pct.m3, 1, true));
  out << "\nPearson r (NB vs HITS, per article): P@5 " << detail::fixed(r.pearson_p5, 3) << ", M@5 "
      << detail::fixed(r.pearson_m5, 3) << '\n';
}

inline void write_csv(std::ostream& out, const EvalReport& r) {
  auto cell = [](std::optional<double> v) {
    if (!v) return std::string{};
    std::ostringstream os;
    os << std::setprecision(17) << *v;
    return os.str();
  };
  out << "id,ratio_op,nb_p3,nb_p5,nb_m3,nb_m5,hits_p3,hits_p5,hits_m3,hits_m5\n";
  for (const auto& a : r.per_article)
    out << a.id << ',' << cell(a.ratio) << ',' << cell(a.nb.p3) << ',' << cell(a.nb.p5) << ',' << cell(a.nb.m3)
        << ',' << cell(a.nb.m5) << ',' << cell(a.hits.p3) << ',' << cell(a.hits.p5) << ',' << cell(a.hits.m3) << ','
        << cell(a.hits.m5) << '\n';
}

inline nlohmann::json to_json(const std::vector<SweepRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"label", r.entry.label},
                   {"hub_exp", r.entry.params.hub_exp},
                   {"sim_exp", r.entry.params.sim_exp},
                   {"alpha", r.entry.params.use_distance ? nlohmann::json(r.entry.params.alpha) : nlohmann::json(nullptr)},
                   {"scale", r.entry.params.scale},
                   {"P@5", r.mean_p5},
                   {"M@5", detail::opt_json(r.mean_m5)}});
  return out;
}

inline void write_table(std::ostream& out, const std::vector<SweepRow>& rows) {
  std::size_t width = std::string("Function").size();
  for (const auto& r : rows) width = std::max(width, r.entry.label.size());
  out << std::left << std::setw(static_cast<int>(width + 2)) << "Function" << std::right << std::setw(8) << "P@5"
      << std::setw(8) << "M@5" << '\n';
  for (const auto& r : rows)
    out << std::left << std::setw(static_cast<int>(width + 2)) << r.entry.label << std::right << std::setw(8)
        << detail::fixed(r.mean_p5) << std::setw(8) << detail::fixed(r.mean_m5) << '\n';
}

}  // namespace ophits
