#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "nli/attention.hpp"
#include "nli/autodiff.hpp"
#include "nli/corpus.hpp"
#include "nli/ner.hpp"
#include "nli/tensor.hpp"

namespace nli {

enum class AttentionMode { Baseline, Lambda };

std::string to_string(AttentionMode m);
AttentionMode mode_from_string(const std::string& s);

/// Token -> dense index map. Index 0 is the shared UNK embedding; every
/// out-of-vocabulary token at inference time maps to it. Tokens are
/// case-folded and sorted, so the vocabulary does not depend on corpus order.
struct Vocabulary {
  std::vector<std::string> tokens;  // index order, tokens[0] == "<unk>"
  std::unordered_map<std::string, int> index;

  static Vocabulary build(const std::vector<NliExample>& examples);
  static Vocabulary from_tokens(std::vector<std::string> tokens_in_order);

  int lookup(const std::string& token) const;
  int size() const { return static_cast<int>(tokens.size()); }
};

struct ModelConfig {
  AttentionMode mode = AttentionMode::Baseline;
  int embed_dim = 32;
  int transform_dim = 32;
  int compare_dim = 32;
  int hidden_dim = 32;
  double w = 1.0;          // symbolic-match weight
  double slope = 0.01;     // LeakyReLU slope
  double pos_scale = 0.1;  // positional signal amplitude; 0 disables
  double lr = 0.05;
  int epochs = 20;
  int batch = 32;
  uint64_t seed = 1;
};

/// Every learnable array plus the frozen lookup state the model needs to run
/// stand-alone (vocabulary and gazetteer travel with the checkpoint).
struct ModelParams {
  ModelConfig config;
  Vocabulary vocab;
  Gazetteer gazetteer;
  SymConfig sym;
  Tensor embeddings;    // |V| x embed_dim
  Tensor transform_w;   // embed_dim x transform_dim
  Tensor transform_b;   // 1 x transform_dim
  Tensor compare_w;     // 2*transform_dim x compare_dim
  Tensor compare_b;     // 1 x compare_dim
  Tensor aggregate_w;   // 2*compare_dim x hidden_dim
  Tensor aggregate_b;   // 1 x hidden_dim
  Tensor classifier_w;  // hidden_dim x 3
  Tensor classifier_b;  // 1 x 3
  LambdaLayerParams lambda;
};

/// Weights uniform in +/-0.1, biases zero, lambda gate weights all ones
/// (so a fresh lambda model starts as pure vector similarity).
ModelParams init_params(const ModelConfig& cfg, Vocabulary vocab, Gazetteer gazetteer);

/// Named views over the learnable arrays, in a fixed order.
std::vector<std::pair<std::string, Tensor*>> param_groups(ModelParams& p);

/// Fixed sinusoidal position signal, scaled by `amplitude`.
Tensor positional_encoding(int len, int dim, double amplitude);

/// Token embeddings (plus position signal) through the transform layer.
Tensor embed_and_transform(const std::vector<std::string>& tokens, const ModelParams& p);

struct ForwardResult {
  std::array<double, kNumLabels> probs;
  AttentionMatrices attn;
};

/// Full attend/compare/aggregate/classify pass. In baseline mode the
/// returned matrices satisfy e_prime == e, lambda == 1, sym == 0.
ForwardResult forward(const NliExample& ex, const ModelParams& p);

/// -log(max(probs[gold], 1e-12)).
double loss(const std::array<double, kNumLabels>& probs, Label gold);

/// Tape ids of the staged parameters, for building training/check graphs.
struct ParamIds {
  GradTape::Id embeddings, transform_w, transform_b, compare_w, compare_b, aggregate_w,
      aggregate_b, classifier_w, classifier_b, lambda_w;
};
ParamIds stage_params(GradTape& tape, const ModelParams& p);

struct TapeForward {
  GradTape::Id probs;
  AttentionMatrices attn;
};
TapeForward forward_on_tape(GradTape& tape, const ParamIds& ids, const ModelParams& p,
                            const NliExample& ex);
GradTape::Id loss_on_tape(GradTape& tape, GradTape::Id probs, Label gold);

struct EpochMetrics {
  int epoch = 0;
  double train_acc = 0.0;  // running accuracy over the epoch's forward passes
  double dev_acc = 0.0;
  double mean_loss = 0.0;
};

struct TrainResult {
  ModelParams params;  // best dev-accuracy epoch
  std::vector<EpochMetrics> metrics;
  int best_epoch = 0;  // 1-based; 0 when epochs == 0
};

/// Deterministic mini-batch gradient descent. Example order is owned by the
/// seed: the train set is canonically sorted before the seeded shuffle, so
/// input file order cannot leak into the result.
TrainResult train(const std::vector<NliExample>& train_set,
                  const std::vector<NliExample>& dev_set, const ModelConfig& cfg,
                  const Gazetteer& gazetteer);

struct EvalResult {
  double accuracy = 0.0;
  std::array<std::array<int, kNumLabels>, kNumLabels> confusion{};  // [gold][pred]
  struct SourceStat {
    int correct = 0;
    int total = 0;
  };
  std::map<std::string, SourceStat> per_source;
  int total = 0;
};

/// Accuracy is mean of argmax(probs)==gold; argmax ties resolve to the
/// lowest label index.
EvalResult evaluate(const std::vector<NliExample>& dataset, const ModelParams& p);

/// JSON checkpoint; load(save(p)) round-trips bit-exactly.
void save_checkpoint(const std::string& path, const ModelParams& p);
ModelParams load_checkpoint(const std::string& path);

}  // namespace nli
