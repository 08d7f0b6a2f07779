#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace nli {

/// Dense row-major matrix of 64-bit floats. Ops treat tensors as immutable
/// values and return fresh results; product(shape) == data.size() always.
struct Tensor {
  std::vector<int> shape;  // {rows, cols}
  std::vector<double> data;

  Tensor() : shape{0, 0} {}
  Tensor(int rows, int cols) : shape{rows, cols}, data(static_cast<size_t>(rows) * cols, 0.0) {}

  static Tensor zeros(int rows, int cols) { return Tensor(rows, cols); }
  static Tensor full(int rows, int cols, double v);
  /// Build from nested initializer lists, e.g. Tensor::of({{1,2},{3,4}}).
  static Tensor of(std::initializer_list<std::initializer_list<double>> rows);

  int rows() const { return shape[0]; }
  int cols() const { return shape[1]; }
  size_t size() const { return data.size(); }

  double& at(int i, int j) { return data[static_cast<size_t>(i) * shape[1] + j]; }
  double at(int i, int j) const { return data[static_cast<size_t>(i) * shape[1] + j]; }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }
};

std::string shape_str(const Tensor& t);
bool all_finite(const Tensor& t);

Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor hadamard(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);

/// Elementwise x if x >= 0 else slope * x. Requires slope in (0,1).
Tensor leaky_relu(const Tensor& x, double slope);
double leaky_relu(double x, double slope);

/// Row-wise softmax with max-subtraction; each output row sums to 1.
Tensor softmax_rows(const Tensor& m);

}  // namespace nli
