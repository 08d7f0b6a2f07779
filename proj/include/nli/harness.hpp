#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nli/model.hpp"

namespace nli::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

/// Seed resolution order: explicit value, then NLI_SEED env var, then fallback.
uint64_t resolve_seed(const std::optional<uint64_t>& flag, uint64_t fallback);

struct GenerateOptions {
  std::string config_path;
  std::string out_dir;  // overrides the config's out_dir when nonempty
};
int cmd_generate(const GenerateOptions& opt);

struct TrainOptions {
  std::vector<std::string> train_paths;
  std::string dev_path;
  std::string out_path = "model.json";
  std::string metrics_path;  // default: out_path + ".metrics.csv"
  std::string lexicon_dir = "data/lexicons";
  ModelConfig config;
  std::optional<uint64_t> seed_flag;
};
int cmd_train(const TrainOptions& opt);

struct EvalOptions {
  std::string checkpoint_path;
  std::string corpus_path;
  std::string json_out;  // optional
};
int cmd_eval(const EvalOptions& opt);

struct PredictOptions {
  std::string checkpoint_path;
  std::string premise;
  std::string hypothesis;
  bool explain = false;
  std::string json_out;  // optional; --explain always prints JSON to stdout
};
int cmd_predict(const PredictOptions& opt);

struct GradcheckOptions {
  std::optional<uint64_t> seed_flag;
  double eps = 1e-5;
  double threshold = 1e-4;
};
int cmd_gradcheck(const GradcheckOptions& opt);

struct ExperimentOptions {
  std::string spec_path;
  std::string out_dir = "out/experiments";
};
int cmd_experiment(const ExperimentOptions& opt);

// ---- pieces shared with tests ----

struct GradcheckRow {
  std::string mode;
  std::string group;
  double max_rel_err = 0.0;
};
/// Per-parameter-group check on a small synthetic model; seeds are advanced
/// past configurations whose LeakyReLU inputs sit within 10*eps of the kink.
std::vector<GradcheckRow> run_gradcheck(uint64_t seed, double eps);

struct ExperimentRowResult {
  std::string name;
  std::string mode;
  double train_acc = 0.0;
  double test_acc = 0.0;
  uint64_t seed = 0;
  double wall_seconds = 0.0;
  std::string error;  // nonempty when the row failed
  EvalResult test_eval;
};

uint64_t fnv1a64(std::string_view bytes, uint64_t h = 1469598103934665603ULL);
uint64_t hash_file(const std::string& path, uint64_t h);

}  // namespace nli::cli
