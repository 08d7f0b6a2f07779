#include "nli/attention.hpp"

#include <stdexcept>

#include "nli/text.hpp"

namespace nli {

Tensor dot_attention(const Tensor& a_bar, const Tensor& b_bar) {
  if (a_bar.cols() != b_bar.cols())
    throw std::invalid_argument("dot_attention: embedding dims disagree " + shape_str(a_bar) +
                                " vs " + shape_str(b_bar));
  return matmul(a_bar, transpose(b_bar));
}

Tensor symbolic_similarity(const std::vector<std::string>& tokens_a,
                           const std::vector<std::string>& tokens_b, const SymConfig& cfg) {
  if (tokens_a.empty() || tokens_b.empty())
    throw std::invalid_argument("symbolic_similarity: token lists must be nonempty");
  std::vector<std::string> fa(tokens_a.size()), fb(tokens_b.size());
  for (size_t i = 0; i < tokens_a.size(); ++i) fa[i] = case_fold(tokens_a[i]);
  for (size_t j = 0; j < tokens_b.size(); ++j) fb[j] = case_fold(tokens_b[j]);
  Tensor sym(static_cast<int>(fa.size()), static_cast<int>(fb.size()));
  for (int i = 0; i < sym.rows(); ++i)
    for (int j = 0; j < sym.cols(); ++j)
      if (fa[i] == fb[j]) sym.at(i, j) = cfg.w;
  return sym;
}

double lambda_gate_scalar(double preactivation, double slope) {
  return 1.0 - leaky_relu(1.0 - leaky_relu(preactivation, slope), slope);
}

double lambda_gate(const PairFeature& x, const LambdaLayerParams& p, double slope) {
  double pre = 0.0;
  for (int k = 0; k < kPairFeatureDim; ++k) pre += p.w.at(0, k) * x.x[k];
  return lambda_gate_scalar(pre, slope);
}

Tensor pair_index_matrix(const std::vector<std::string>& tokens_a,
                         const std::vector<std::string>& tokens_b, const Gazetteer& g) {
  std::vector<NerCategory> ca(tokens_a.size()), cb(tokens_b.size());
  for (size_t i = 0; i < tokens_a.size(); ++i) ca[i] = tag_token(tokens_a[i], g);
  for (size_t j = 0; j < tokens_b.size(); ++j) cb[j] = tag_token(tokens_b[j], g);
  Tensor idx(static_cast<int>(ca.size()), static_cast<int>(cb.size()));
  for (int i = 0; i < idx.rows(); ++i)
    for (int j = 0; j < idx.cols(); ++j) idx.at(i, j) = pair_index(ca[i], cb[j]);
  return idx;
}

Tensor blend(const Tensor& e, const Tensor& sym, const Tensor& lambda) {
  if (!e.same_shape(sym) || !e.same_shape(lambda))
    throw std::invalid_argument("blend: shape mismatch " + shape_str(e) + " vs " + shape_str(sym) +
                                " vs " + shape_str(lambda));
  Tensor out(e.rows(), e.cols());
  for (size_t i = 0; i < out.size(); ++i)
    out.data[i] = lambda.data[i] * e.data[i] + (1.0 - lambda.data[i]) * sym.data[i];
  return out;
}

}  // namespace nli
