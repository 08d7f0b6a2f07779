#pragma once

#include <string>
#include <vector>

#include "nli/ner.hpp"
#include "nli/tensor.hpp"

namespace nli {

/// Weight assigned to a string match in the symbolic similarity matrix.
struct SymConfig {
  double w = 1.0;
};

/// Gate weights, one scalar per NER category pair. No bias term.
struct LambdaLayerParams {
  Tensor w;  // 1x16

  LambdaLayerParams() : w(Tensor::full(1, kPairFeatureDim, 1.0)) {}
};

/// The four attention matrices for one sentence pair, all l_a x l_b.
/// e_prime[i][j] == lambda[i][j]*e[i][j] + (1-lambda[i][j])*sym[i][j],
/// exactly as computed.
struct AttentionMatrices {
  Tensor e;
  Tensor sym;
  Tensor lambda;
  Tensor e_prime;
};

/// Unnormalized dot-product attention: out[i][j] = a_bar_i . b_bar_j.
Tensor dot_attention(const Tensor& a_bar, const Tensor& b_bar);

/// sym[i][j] = cfg.w when the case-folded tokens match exactly, else 0.
Tensor symbolic_similarity(const std::vector<std::string>& tokens_a,
                           const std::vector<std::string>& tokens_b, const SymConfig& cfg);

/// 1 - LeakyReLU(1 - LeakyReLU(z)). Identity on [0,1]; no clamping outside.
double lambda_gate_scalar(double preactivation, double slope);

/// Gate value for a one-hot pair feature: the pre-activation is W.x.
double lambda_gate(const PairFeature& x, const LambdaLayerParams& p, double slope);

/// Category-pair index per cell, as integral doubles; feeds a gather over W.
Tensor pair_index_matrix(const std::vector<std::string>& tokens_a,
                         const std::vector<std::string>& tokens_b, const Gazetteer& g);

/// Eq-by-eq blend: out[i][j] = lambda[i][j]*e[i][j] + (1-lambda[i][j])*sym[i][j].
Tensor blend(const Tensor& e, const Tensor& sym, const Tensor& lambda);

}  // namespace nli
