#pragma once

// Subcommand bodies for the `ophits` tool. Each takes a RunConfig plus the
// streams to write to and returns a process exit code.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "ophits/ophits.hpp"

namespace ophits::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kInternalError = 3 };

struct RunConfig {
  std::filesystem::path corpus;
  std::filesystem::path pos_lexicon;
  std::filesystem::path neg_lexicon;
  std::filesystem::path model;
  std::filesystem::path grid;
  std::optional<std::filesystem::path> emit_json;
  std::optional<std::filesystem::path> emit_dot;
  std::optional<std::filesystem::path> emit_csv;
  std::optional<std::string> article;
  WeightParams params;
  double epsilon = kDefaultEpsilon;
  std::size_t max_iter = kDefaultMaxIter;
  std::size_t top_k = 5;
  std::size_t top_auths = 4;

  HitsConfig hits() const { return {params, epsilon, max_iter}; }
};

namespace detail {

inline std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw InputError("cannot write " + p.string());
  return out;
}

inline std::string num(double v, int prec = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << v;
  return os.str();
}

inline void print_conditionals(std::ostream& out, const char* name, const ClassConditionals& c) {
  out << "  " << name << ":\n"
      << "    pos_count  ~ N(" << num(c.pos_count.mean) << ", " << num(c.pos_count.variance) << ")\n"
      << "    neg_count  ~ N(" << num(c.neg_count.mean) << ", " << num(c.neg_count.variance) << ")\n"
      << "    root       pos " << num(c.root_polarity[0]) << "  neg " << num(c.root_polarity[1]) << "  neutral "
      << num(c.root_polarity[2]) << "\n"
      << "    P(acomp) " << num(c.has_acomp) << "  P(xcomp) " << num(c.has_xcomp) << "  P(advmod) "
      << num(c.has_advmod) << "\n";
}

/// Maps library exceptions onto exit codes, reporting on err.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ContractViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace detail

inline int cmd_train(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Corpus corpus = load_corpus(cfg.corpus, Split::Train);
    const Lexicon lex = load_lexicon(cfg.pos_lexicon, cfg.neg_lexicon);
    const NBModel model = train(corpus, lex);
    save_model(cfg.model, model);
    out << "trained on " << corpus.documents.size() << " articles -> " << cfg.model.string() << '\n'
        << "class priors: opinionated " << detail::num(model.prior(OpinionClass::Opinionated)) << ", factual "
        << detail::num(model.prior(OpinionClass::Factual)) << '\n';
    detail::print_conditionals(out, "opinionated", model.of(OpinionClass::Opinionated));
    detail::print_conditionals(out, "factual", model.of(OpinionClass::Factual));
    return int{kOk};
  });
}

inline int cmd_rank(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Corpus corpus = load_corpus(cfg.corpus);
    const Lexicon lex = load_lexicon(cfg.pos_lexicon, cfg.neg_lexicon);
    const NBModel model = load_model(cfg.model);

    std::vector<const AnnotatedDocument*> docs;
    for (const auto& d : corpus.documents)
      if (!cfg.article || d.id == *cfg.article) docs.push_back(&d);
    if (cfg.article && docs.empty()) throw InputError("article '" + *cfg.article + "' not found in corpus");
    if (docs.empty()) throw InputError("corpus contains no articles");
    if ((cfg.emit_json || cfg.emit_dot) && docs.size() > 1)
      throw InputError("--emit-json/--emit-dot need a single article; select one with --article");

    for (const AnnotatedDocument* doc : docs) {
      const ArticleRun run = run_article(*doc, lex, model, cfg.hits());
      out << "# " << doc->id << " (" << doc->size() << " sentences, " << run.state.iterations << " iterations"
          << (run.state.converged ? "" : ", not converged") << ")\n";
      const std::size_t k = std::min(cfg.top_k, doc->size());
      for (std::size_t r = 0; r < k; ++r) {
        const std::size_t pos = run.hits_ranking.order[r];
        out << r + 1 << "\tS" << pos << "\thub=" << detail::num(run.hits_ranking.scores[r])
            << "\tprior=" << detail::num(run.priors[pos]) << '\t' << doc->sentences[pos].text << '\n';
      }
      if (cfg.emit_json || cfg.emit_dot) {
        const auto report = hub_authority_report(run.state, run.graph, *doc, cfg.top_k, cfg.top_auths);
        if (cfg.emit_json) detail::open_out(*cfg.emit_json) << to_json(report).dump(2) << '\n';
        if (cfg.emit_dot) {
          auto f = detail::open_out(*cfg.emit_dot);
          write_dot(f, report);
        }
      }
    }
    return int{kOk};
  });
}

inline int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Corpus corpus = load_corpus(cfg.corpus, Split::Test);
    const Lexicon lex = load_lexicon(cfg.pos_lexicon, cfg.neg_lexicon);
    const NBModel model = load_model(cfg.model);
    if (corpus.documents.empty()) throw InputError("evaluation corpus contains no articles");
    const EvalReport report = evaluate(corpus, lex, model, cfg.hits());
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';
    write_table(out, report);
    if (cfg.emit_json) detail::open_out(*cfg.emit_json) << to_json(report).dump(2) << '\n';
    if (cfg.emit_csv) {
      auto f = detail::open_out(*cfg.emit_csv);
      write_csv(f, report);
    }
    return int{kOk};
  });
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto grid = load_grid(cfg.grid);
    const Corpus corpus = load_corpus(cfg.corpus, Split::Test);
    const Lexicon lex = load_lexicon(cfg.pos_lexicon, cfg.neg_lexicon);
    const NBModel model = load_model(cfg.model);
    const auto rows = sweep(corpus, lex, model, grid, cfg.epsilon, cfg.max_iter);
    write_table(out, rows);
    if (cfg.emit_json) detail::open_out(*cfg.emit_json) << to_json(rows).dump(2) << '\n';
    return int{kOk};
  });
}

}  // namespace ophits::cli
