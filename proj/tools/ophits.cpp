// ophits: rank opinionated sentences of news articles with a Naive Bayes
// prior followed by weighted HITS.
//
//   ophits train --corpus train.jsonl --pos-lexicon pos.txt --neg-lexicon neg.txt --model nb.json
//   ophits rank  --corpus article.jsonl ... --model nb.json [--emit-json h.json] [--emit-dot h.dot]
//   ophits eval  --corpus test.jsonl ... --model nb.json [--emit-json report.json]
//   ophits sweep --corpus test.jsonl ... --model nb.json --grid data/weight_grid.csv

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ophits/cli.hpp"

namespace {

void add_common(CLI::App* sub, ophits::cli::RunConfig& cfg, bool need_model_file) {
  sub->add_option("--corpus", cfg.corpus, "Corpus JSONL file")->required()->check(CLI::ExistingFile);
  sub->add_option("--pos-lexicon", cfg.pos_lexicon, "Positive polar words, one per line")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--neg-lexicon", cfg.neg_lexicon, "Negative polar words, one per line")
      ->required()
      ->check(CLI::ExistingFile);
  auto* model = sub->add_option("--model", cfg.model, "Naive Bayes model JSON")->required();
  if (need_model_file) model->check(CLI::ExistingFile);
}

void add_hits(CLI::App* sub, ophits::cli::RunConfig& cfg) {
  sub->add_option("--epsilon", cfg.epsilon, "HITS convergence threshold (mean squared change)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--max-iter", cfg.max_iter, "HITS iteration cap")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--hub-exp", cfg.params.hub_exp, "Exponent on the source prior")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_option("--sim-exp", cfg.params.sim_exp, "Exponent on cosine similarity")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_option("--alpha", cfg.params.alpha, "Additive term in (alpha + 1/distance)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = ophits::cli;
  CLI::App app{"Opinionated sentence ranking with Naive Bayes priors and weighted HITS"};
  app.require_subcommand(1);
  cli::RunConfig cfg;

  auto* train = app.add_subcommand("train", "Train the sentence classifier and write a model file");
  add_common(train, cfg, false);

  auto* rank = app.add_subcommand("rank", "Print the top sentences of each article by hub score");
  add_common(rank, cfg, true);
  add_hits(rank, cfg);
  rank->add_option("--top-k", cfg.top_k, "Sentences to print (also hubs in the report)")->capture_default_str();
  rank->add_option("--top-auths", cfg.top_auths, "Authorities listed per hub")->capture_default_str();
  rank->add_option("--article", cfg.article, "Only rank the article with this id");
  rank->add_option("--emit-json", cfg.emit_json, "Write the hub/authority report as JSON");
  rank->add_option("--emit-dot", cfg.emit_dot, "Write the hub/authority report as Graphviz DOT");

  auto* eval = app.add_subcommand("eval", "Compare NB and HITS rankings with P@k / M@k");
  add_common(eval, cfg, true);
  add_hits(eval, cfg);
  eval->add_option("--emit-json", cfg.emit_json, "Write the full report as JSON");
  eval->add_option("--emit-csv", cfg.emit_csv, "Write per-article scores as CSV");

  auto* sweep = app.add_subcommand("sweep", "Evaluate HITS under every weight setting of a grid file");
  add_common(sweep, cfg, true);
  sweep->add_option("--epsilon", cfg.epsilon, "HITS convergence threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--max-iter", cfg.max_iter, "HITS iteration cap")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--grid", cfg.grid, "Grid CSV: label,hub_exp,sim_exp,alpha[,scale]")
      ->required()
      ->check(CLI::ExistingFile);
  sweep->add_option("--emit-json", cfg.emit_json, "Write the sweep table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; usage errors count as bad input.
    return app.exit(e) == 0 ? cli::kOk : cli::kInputError;
  }

  if (*train) return cli::cmd_train(cfg, std::cout, std::cerr);
  if (*rank) return cli::cmd_rank(cfg, std::cout, std::cerr);
  if (*eval) return cli::cmd_eval(cfg, std::cout, std::cerr);
  return cli::cmd_sweep(cfg, std::cout, std::cerr);
}
