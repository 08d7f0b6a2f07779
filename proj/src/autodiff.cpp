#include "nli/autodiff.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace nli {

GradTape::Id GradTape::push(Tensor value, std::function<void(GradTape&)> back) {
  nodes_.push_back(Node{std::move(value), Tensor(), std::move(back)});
  return static_cast<Id>(nodes_.size()) - 1;
}

GradTape::Id GradTape::leaf(Tensor value) { return push(std::move(value), {}); }

GradTape::Id GradTape::matmul(Id a, Id b) {
  Tensor out = nli::matmul(value(a), value(b));
  Id id = push(std::move(out), {});
  nodes_[id].back = [a, b, id](GradTape& t) {
    // dA += dOut * B^T ; dB += A^T * dOut
    const Tensor& go = t.g(id);
    const Tensor& av = t.value(a);
    const Tensor& bv = t.value(b);
    Tensor& ga = t.g(a);
    Tensor& gb = t.g(b);
    for (int i = 0; i < av.rows(); ++i)
      for (int j = 0; j < bv.cols(); ++j) {
        const double gij = go.at(i, j);
        if (gij == 0.0) continue;
        for (int p = 0; p < av.cols(); ++p) {
          ga.at(i, p) += gij * bv.at(p, j);
          gb.at(p, j) += av.at(i, p) * gij;
        }
      }
  };
  return id;
}

GradTape::Id GradTape::add(Id a, Id b) {
  Tensor out = nli::add(value(a), value(b));
  Id id = push(std::move(out), {});
  nodes_[id].back = [a, b, id](GradTape& t) {
    const Tensor& go = t.g(id);
    for (size_t i = 0; i < go.size(); ++i) {
      t.g(a).data[i] += go.data[i];
      t.g(b).data[i] += go.data[i];
    }
  };
  return id;
}

GradTape::Id GradTape::add_row(Id x, Id row) {
  const Tensor& xv = value(x);
  const Tensor& rv = value(row);
  if (rv.rows() != 1 || rv.cols() != xv.cols())
    throw std::invalid_argument("add_row: row must be 1x" + std::to_string(xv.cols()) + ", got " + shape_str(rv));
  Tensor out = xv;
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out.at(i, j) += rv.at(0, j);
  Id id = push(std::move(out), {});
  nodes_[id].back = [x, row, id](GradTape& t) {
    const Tensor& go = t.g(id);
    for (int i = 0; i < go.rows(); ++i)
      for (int j = 0; j < go.cols(); ++j) {
        t.g(x).at(i, j) += go.at(i, j);
        t.g(row).at(0, j) += go.at(i, j);
      }
  };
  return id;
}

GradTape::Id GradTape::mul(Id a, Id b) {
  Tensor out = hadamard(value(a), value(b));
  Id id = push(std::move(out), {});
  nodes_[id].back = [a, b, id](GradTape& t) {
    const Tensor& go = t.g(id);
    const Tensor& av = t.value(a);
    const Tensor& bv = t.value(b);
    for (size_t i = 0; i < go.size(); ++i) {
      t.g(a).data[i] += go.data[i] * bv.data[i];
      t.g(b).data[i] += go.data[i] * av.data[i];
    }
  };
  return id;
}

GradTape::Id GradTape::affine(Id x, double scale, double shift) {
  Tensor out = value(x);
  for (auto& v : out.data) v = scale * v + shift;
  Id id = push(std::move(out), {});
  nodes_[id].back = [x, scale, id](GradTape& t) {
    const Tensor& go = t.g(id);
    for (size_t i = 0; i < go.size(); ++i) t.g(x).data[i] += scale * go.data[i];
  };
  return id;
}

GradTape::Id GradTape::leaky_relu(Id x, double slope) {
  const Tensor& xv = value(x);
  for (double v : xv.data) min_abs_leaky_input_ = std::min(min_abs_leaky_input_, std::fabs(v));
  Tensor out = nli::leaky_relu(xv, slope);
  Id id = push(std::move(out), {});
  nodes_[id].back = [x, slope, id](GradTape& t) {
    const Tensor& go = t.g(id);
    const Tensor& xin = t.value(x);
    for (size_t i = 0; i < go.size(); ++i)
      t.g(x).data[i] += go.data[i] * (xin.data[i] >= 0.0 ? 1.0 : slope);
  };
  return id;
}

GradTape::Id GradTape::softmax_rows(Id x) {
  Tensor out = nli::softmax_rows(value(x));
  Id id = push(std::move(out), {});
  nodes_[id].back = [x, id](GradTape& t) {
    // dX_ij = p_ij * (dY_ij - sum_k dY_ik p_ik)
    const Tensor& go = t.g(id);
    const Tensor& p = t.value(id);
    for (int i = 0; i < p.rows(); ++i) {
      double dot = 0.0;
      for (int k = 0; k < p.cols(); ++k) dot += go.at(i, k) * p.at(i, k);
      for (int j = 0; j < p.cols(); ++j) t.g(x).at(i, j) += p.at(i, j) * (go.at(i, j) - dot);
    }
  };
  return id;
}

GradTape::Id GradTape::transpose(Id x) {
  Tensor out = nli::transpose(value(x));
  Id id = push(std::move(out), {});
  nodes_[id].back = [x, id](GradTape& t) {
    const Tensor& go = t.g(id);
    for (int i = 0; i < go.rows(); ++i)
      for (int j = 0; j < go.cols(); ++j) t.g(x).at(j, i) += go.at(i, j);
  };
  return id;
}

GradTape::Id GradTape::concat_cols(Id a, Id b) {
  const Tensor& av = value(a);
  const Tensor& bv = value(b);
  if (av.rows() != bv.rows())
    throw std::invalid_argument("concat_cols: row counts differ " + shape_str(av) + " vs " + shape_str(bv));
  Tensor out(av.rows(), av.cols() + bv.cols());
  for (int i = 0; i < av.rows(); ++i) {
    for (int j = 0; j < av.cols(); ++j) out.at(i, j) = av.at(i, j);
    for (int j = 0; j < bv.cols(); ++j) out.at(i, av.cols() + j) = bv.at(i, j);
  }
  Id id = push(std::move(out), {});
  const int ac = av.cols(), bc = bv.cols();
  nodes_[id].back = [a, b, ac, bc, id](GradTape& t) {
    const Tensor& go = t.g(id);
    for (int i = 0; i < go.rows(); ++i) {
      for (int j = 0; j < ac; ++j) t.g(a).at(i, j) += go.at(i, j);
      for (int j = 0; j < bc; ++j) t.g(b).at(i, j) += go.at(i, ac + j);
    }
  };
  return id;
}

GradTape::Id GradTape::sum_rows(Id x) {
  const Tensor& xv = value(x);
  Tensor out(1, xv.cols());
  for (int i = 0; i < xv.rows(); ++i)
    for (int j = 0; j < xv.cols(); ++j) out.at(0, j) += xv.at(i, j);
  Id id = push(std::move(out), {});
  nodes_[id].back = [x, id](GradTape& t) {
    const Tensor& go = t.g(id);
    Tensor& gx = t.g(x);
    for (int i = 0; i < gx.rows(); ++i)
      for (int j = 0; j < gx.cols(); ++j) gx.at(i, j) += go.at(0, j);
  };
  return id;
}

GradTape::Id GradTape::gather_rows(Id table, std::vector<int> rows) {
  const Tensor& tv = value(table);
  Tensor out(static_cast<int>(rows.size()), tv.cols());
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < tv.cols(); ++j) out.at(static_cast<int>(i), j) = tv.at(rows[i], j);
  Id id = push(std::move(out), {});
  nodes_[id].back = [table, rows = std::move(rows), id](GradTape& t) {
    const Tensor& go = t.g(id);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < go.cols(); ++j) t.g(table).at(rows[i], j) += go.at(static_cast<int>(i), j);
  };
  return id;
}

GradTape::Id GradTape::gather_cells(Id row_vec, Tensor idx) {
  const Tensor& rv = value(row_vec);
  if (rv.rows() != 1) throw std::invalid_argument("gather_cells: source must be a row vector, got " + shape_str(rv));
  Tensor out(idx.rows(), idx.cols());
  for (int i = 0; i < idx.rows(); ++i)
    for (int j = 0; j < idx.cols(); ++j) out.at(i, j) = rv.at(0, static_cast<int>(idx.at(i, j)));
  Id id = push(std::move(out), {});
  nodes_[id].back = [row_vec, idx = std::move(idx), id](GradTape& t) {
    const Tensor& go = t.g(id);
    for (int i = 0; i < go.rows(); ++i)
      for (int j = 0; j < go.cols(); ++j)
        t.g(row_vec).at(0, static_cast<int>(idx.at(i, j))) += go.at(i, j);
  };
  return id;
}

GradTape::Id GradTape::pick(Id x, int i, int j) {
  Tensor out(1, 1);
  out.at(0, 0) = value(x).at(i, j);
  Id id = push(std::move(out), {});
  nodes_[id].back = [x, i, j, id](GradTape& t) { t.g(x).at(i, j) += t.g(id).at(0, 0); };
  return id;
}

GradTape::Id GradTape::log_clamped(Id x, double floor) {
  Tensor out = value(x);
  for (auto& v : out.data) v = std::log(std::max(v, floor));
  Id id = push(std::move(out), {});
  nodes_[id].back = [x, floor, id](GradTape& t) {
    const Tensor& go = t.g(id);
    const Tensor& xin = t.value(x);
    for (size_t i = 0; i < go.size(); ++i)
      if (xin.data[i] > floor) t.g(x).data[i] += go.data[i] / xin.data[i];
  };
  return id;
}

void GradTape::backward(Id root) {
  const Tensor& rv = value(root);
  if (rv.rows() != 1 || rv.cols() != 1)
    throw std::invalid_argument("backward: root must be 1x1, got " + shape_str(rv));
  for (auto& n : nodes_) n.grad = Tensor(n.value.rows(), n.value.cols());
  nodes_[root].grad.at(0, 0) = 1.0;
  for (Id id = root; id >= 0; --id)
    if (nodes_[id].back) nodes_[id].back(*this);
}

double grad_check(const std::function<double(const std::vector<Tensor>&)>& f,
                  const std::vector<Tensor>& params, const std::vector<Tensor>& analytic,
                  double eps) {
  if (params.size() != analytic.size())
    throw std::invalid_argument("grad_check: params/analytic count mismatch");
  std::vector<Tensor> work = params;
  double max_rel = 0.0;
  for (size_t p = 0; p < work.size(); ++p) {
    for (size_t i = 0; i < work[p].data.size(); ++i) {
      const double saved = work[p].data[i];
      work[p].data[i] = saved + eps;
      const double hi = f(work);
      work[p].data[i] = saved - eps;
      const double lo = f(work);
      work[p].data[i] = saved;
      const double fd = (hi - lo) / (2.0 * eps);
      const double an = analytic[p].data[i];
      const double rel = std::fabs(an - fd) / std::max(1.0, std::fabs(an));
      max_rel = std::max(max_rel, rel);
    }
  }
  return max_rel;
}

}  // namespace nli
