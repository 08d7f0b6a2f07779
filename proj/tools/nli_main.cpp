#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nli/harness.hpp"

namespace {

void add_model_flags(CLI::App* cmd, nli::cli::TrainOptions& opt, std::string& mode,
                     std::optional<uint64_t>& seed) {
  cmd->add_option("--mode", mode, "Attention mode: baseline|lambda")->default_val("baseline");
  cmd->add_option("--w", opt.config.w, "Symbolic match weight (lambda mode)");
  cmd->add_option("--slope", opt.config.slope, "LeakyReLU slope");
  cmd->add_option("--pos-scale", opt.config.pos_scale, "Positional signal amplitude (0 disables)");
  cmd->add_option("--lr", opt.config.lr, "Learning rate");
  cmd->add_option("--epochs", opt.config.epochs, "Training epochs");
  cmd->add_option("--batch", opt.config.batch, "Mini-batch size");
  cmd->add_option("--embed-dim", opt.config.embed_dim, "Embedding width");
  cmd->add_option("--transform-dim", opt.config.transform_dim, "Transform layer width");
  cmd->add_option("--compare-dim", opt.config.compare_dim, "Compare layer width");
  cmd->add_option("--hidden-dim", opt.config.hidden_dim, "Aggregate hidden width");
  cmd->add_option("--seed", seed, "RNG seed (falls back to NLI_SEED, then 1)");
  cmd->add_option("--lexicons", opt.lexicon_dir, "Lexicon directory for the NER gazetteer");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambda-attention NLI toolkit: stress-set generation, training, evaluation"};
  app.require_subcommand(1);

  nli::cli::GenerateOptions gen_opt;
  auto* gen = app.add_subcommand("generate", "Generate NER-Changed / Role-Switched / mixed corpora");
  gen->add_option("config", gen_opt.config_path, "Generation config (JSON)")->required();
  gen->add_option("--out-dir", gen_opt.out_dir, "Override the config's output directory");

  nli::cli::TrainOptions train_opt;
  std::string train_mode = "baseline";
  std::optional<uint64_t> train_seed;
  auto* train = app.add_subcommand("train", "Train a classifier");
  train->add_option("--train", train_opt.train_paths, "Training corpora (JSONL), repeatable")
      ->required();
  train->add_option("--dev", train_opt.dev_path, "Dev corpus for best-epoch selection");
  train->add_option("--out", train_opt.out_path, "Checkpoint output path")->required();
  train->add_option("--metrics", train_opt.metrics_path, "Per-epoch metrics CSV path");
  add_model_flags(train, train_opt, train_mode, train_seed);

  nli::cli::EvalOptions eval_opt;
  auto* eval = app.add_subcommand("eval", "Evaluate a checkpoint on a corpus");
  eval->add_option("checkpoint", eval_opt.checkpoint_path)->required();
  eval->add_option("corpus", eval_opt.corpus_path)->required();
  eval->add_option("--json", eval_opt.json_out, "Write the report as JSON");

  nli::cli::ExperimentOptions exp_opt;
  auto* exp = app.add_subcommand("experiment", "Run an experiment matrix from a spec file");
  exp->add_option("spec", exp_opt.spec_path, "Experiment spec (JSON)")->required();
  exp->add_option("--out-dir", exp_opt.out_dir, "Directory for checkpoints and report");

  nli::cli::GradcheckOptions gc_opt;
  std::optional<uint64_t> gc_seed;
  auto* gc = app.add_subcommand("gradcheck", "Finite-difference check of every parameter group");
  gc->add_option("--seed", gc_seed, "RNG seed (falls back to NLI_SEED, then 1)");
  gc->add_option("--eps", gc_opt.eps, "Central-difference step");

  nli::cli::PredictOptions pred_opt;
  auto* pred = app.add_subcommand("predict", "Classify one premise/hypothesis pair");
  pred->add_option("checkpoint", pred_opt.checkpoint_path)->required();
  pred->add_option("--premise", pred_opt.premise)->required();
  pred->add_option("--hypothesis", pred_opt.hypothesis)->required();
  pred->add_flag("--explain", pred_opt.explain, "Emit the e/sym/lambda/e' matrices as JSON");
  pred->add_option("--json", pred_opt.json_out, "Also write the JSON output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : nli::cli::kExitUsage;
  }

  if (gen->parsed()) return nli::cli::cmd_generate(gen_opt);
  if (train->parsed()) {
    try {
      train_opt.config.mode = nli::mode_from_string(train_mode);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return nli::cli::kExitUsage;
    }
    train_opt.seed_flag = train_seed;
    return nli::cli::cmd_train(train_opt);
  }
  if (eval->parsed()) return nli::cli::cmd_eval(eval_opt);
  if (exp->parsed()) return nli::cli::cmd_experiment(exp_opt);
  if (gc->parsed()) {
    gc_opt.seed_flag = gc_seed;
    return nli::cli::cmd_gradcheck(gc_opt);
  }
  if (pred->parsed()) return nli::cli::cmd_predict(pred_opt);
  return nli::cli::kExitUsage;
}
