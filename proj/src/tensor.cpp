#include "nli/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace nli {

Tensor Tensor::full(int rows, int cols, double v) {
  Tensor t(rows, cols);
  for (auto& x : t.data) x = v;
  return t;
}

Tensor Tensor::of(std::initializer_list<std::initializer_list<double>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Tensor t(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("Tensor::of: ragged rows");
    int j = 0;
    for (double v : row) t.at(i, j++) = v;
    ++i;
  }
  return t;
}

std::string shape_str(const Tensor& t) {
  return "[" + std::to_string(t.rows()) + "x" + std::to_string(t.cols()) + "]";
}

bool all_finite(const Tensor& t) {
  for (double v : t.data)
    if (!std::isfinite(v)) return false;
  return true;
}

static void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  if (!a.same_shape(b))
    throw std::invalid_argument(std::string(op) + ": shape mismatch " + shape_str(a) + " vs " + shape_str(b));
}

Tensor matmul(const Tensor& a, const Tensor& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul: inner dimensions disagree " + shape_str(a) + " x " + shape_str(b));
  const int m = a.rows(), k = a.cols(), n = b.cols();
  Tensor out(m, n);
  for (int i = 0; i < m; ++i) {
    for (int p = 0; p < k; ++p) {
      const double aip = a.at(i, p);
      if (aip == 0.0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += aip * b.at(p, j);
    }
  }
  return out;
}

Tensor transpose(const Tensor& a) {
  Tensor out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  return out;
}

Tensor add(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "add");
  Tensor out = a;
  for (size_t i = 0; i < out.size(); ++i) out.data[i] += b.data[i];
  return out;
}

Tensor sub(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "sub");
  Tensor out = a;
  for (size_t i = 0; i < out.size(); ++i) out.data[i] -= b.data[i];
  return out;
}

Tensor hadamard(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "hadamard");
  Tensor out = a;
  for (size_t i = 0; i < out.size(); ++i) out.data[i] *= b.data[i];
  return out;
}

Tensor scale(const Tensor& a, double s) {
  Tensor out = a;
  for (auto& v : out.data) v *= s;
  return out;
}

double leaky_relu(double x, double slope) { return x >= 0.0 ? x : slope * x; }

Tensor leaky_relu(const Tensor& x, double slope) {
  if (!(slope > 0.0 && slope < 1.0)) throw std::invalid_argument("leaky_relu: slope must be in (0,1)");
  Tensor out = x;
  for (auto& v : out.data) v = leaky_relu(v, slope);
  return out;
}

Tensor softmax_rows(const Tensor& m) {
  Tensor out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    double mx = m.at(i, 0);
    for (int j = 1; j < m.cols(); ++j) mx = std::max(mx, m.at(i, j));
    double sum = 0.0;
    for (int j = 0; j < m.cols(); ++j) {
      const double e = std::exp(m.at(i, j) - mx);
      out.at(i, j) = e;
      sum += e;
    }
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) /= sum;
  }
  return out;
}

}  // namespace nli
