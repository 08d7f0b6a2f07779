#pragma once

#include <functional>
#include <vector>

#include "nli/tensor.hpp"

namespace nli {

/// Reverse-mode gradient tape over Tensor primitives. Nodes are appended in
/// evaluation order; backward() replays them in reverse, accumulating into
/// each node's grad. One tape per training step; a tape is single-threaded.
class GradTape {
 public:
  using Id = int;

  /// Register an input node (parameter or constant).
  Id leaf(Tensor value);

  Id matmul(Id a, Id b);
  Id add(Id a, Id b);
  /// Broadcast-add a 1xC row to every row of x.
  Id add_row(Id x, Id row);
  Id mul(Id a, Id b);
  /// scale * x + shift, elementwise.
  Id affine(Id x, double scale, double shift);
  Id leaky_relu(Id x, double slope);
  Id softmax_rows(Id x);
  Id transpose(Id x);
  Id concat_cols(Id a, Id b);
  /// 1xC sum of the rows of x.
  Id sum_rows(Id x);
  /// Rows of `table` selected by index, in order (embedding lookup).
  Id gather_rows(Id table, std::vector<int> rows);
  /// out[i][j] = row_vec[0][idx.at(i,j)]; idx entries are integral doubles.
  Id gather_cells(Id row_vec, Tensor idx);
  /// 1x1 view of one element.
  Id pick(Id x, int i, int j);
  /// Elementwise log(max(x, floor)); gradient is zero where the floor binds.
  Id log_clamped(Id x, double floor);

  const Tensor& value(Id id) const { return nodes_[id].value; }
  /// Valid after backward().
  const Tensor& grad(Id id) const { return nodes_[id].grad; }

  /// Seeds d(root)/d(root) = 1 and accumulates gradients for every node.
  /// root must be 1x1.
  void backward(Id root);

  /// Smallest |input| seen across all leaky_relu nodes, for kink avoidance.
  double min_abs_leaky_input() const { return min_abs_leaky_input_; }

  size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    Tensor value;
    Tensor grad;
    std::function<void(GradTape&)> back;  // empty for leaves
  };

  Id push(Tensor value, std::function<void(GradTape&)> back);
  Tensor& g(Id id) { return nodes_[id].grad; }

  std::vector<Node> nodes_;
  double min_abs_leaky_input_ = 1e300;
};

/// Max over coordinates of |analytic - central difference| / max(1, |analytic|),
/// with f re-evaluated at params +/- eps per coordinate.
double grad_check(const std::function<double(const std::vector<Tensor>&)>& f,
                  const std::vector<Tensor>& params, const std::vector<Tensor>& analytic,
                  double eps);

}  // namespace nli
