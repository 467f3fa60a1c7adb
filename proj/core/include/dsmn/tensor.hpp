#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dsmn/error.hpp"
#include "dsmn/rng.hpp"

namespace dsmn::ad {

class Tape;

// Dense n-dimensional array of doubles. Copies share storage; `clone` makes a
// deep copy. A tensor optionally carries a provenance handle (tape + node id)
// so that operations on it are recorded for the backward pass.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::int64_t> shape);
  Tensor(std::vector<std::int64_t> shape, std::vector<double> values);

  static Tensor scalar(double v);
  static Tensor zeros(std::vector<std::int64_t> shape);
  static Tensor full(std::vector<std::int64_t> shape, double v);
  // Uniform on [lo, hi].
  static Tensor uniform(std::vector<std::int64_t> shape, Rng& rng, double lo, double hi);

  const std::vector<std::int64_t>& shape() const { return shape_; }
  std::int64_t dim(int i) const { return shape_[static_cast<std::size_t>(i)]; }
  int ndim() const { return static_cast<int>(shape_.size()); }
  std::int64_t numel() const;

  double* data() { return data_->data(); }
  const double* data() const { return data_->data(); }
  std::span<double> span() { return {data_->data(), data_->size()}; }
  std::span<const double> span() const { return {data_->data(), data_->size()}; }

  double value() const;  // single-element tensors only
  double& at(std::int64_t i) { return (*data_)[static_cast<std::size_t>(i)]; }
  double at(std::int64_t i) const { return (*data_)[static_cast<std::size_t>(i)]; }

  Tensor clone() const;
  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  std::string shape_str() const;

  bool tracked() const { return tape_ != nullptr; }
  Tape* tape() const { return tape_; }
  int node() const { return node_; }

 private:
  friend class Tape;
  std::vector<std::int64_t> shape_;
  std::shared_ptr<std::vector<double>> data_ = std::make_shared<std::vector<double>>();
  Tape* tape_ = nullptr;
  int node_ = -1;
};

// Records primitive operations for reverse-mode differentiation. One tape is
// one single-threaded unit of work; leaves registered first receive gradients
// from `backward` in registration order.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  // Marks `t` as a differentiable leaf. Returns a handle sharing t's storage.
  Tensor leaf(const Tensor& t);

  // Runs the backward pass from a scalar loss. Gradients of all leaves, in
  // registration order; shapes match the leaves.
  std::vector<Tensor> backward(const Tensor& loss);

  // Gradient of a specific tracked tensor after `backward` ran.
  const Tensor& grad(const Tensor& t) const;

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_leaves() const { return static_cast<int>(leaves_.size()); }

  // --- used by the operator implementations ---
  struct Node {
    std::vector<int> inputs;
    // Accumulates grads of the inputs given the node's output grad.
    std::function<void(Tape&, const Tensor& out_grad)> backward;
    std::vector<std::int64_t> out_shape;
  };
  int record(Tensor& out, std::vector<int> inputs,
             std::function<void(Tape&, const Tensor&)> backward);
  void accumulate(int node, const Tensor& g);
  const Tensor& grad_of(int node) const;
  bool has_grad(int node) const;

 private:
  std::vector<Node> nodes_;
  std::vector<int> leaves_;
  std::vector<Tensor> grads_;      // per node, lazily materialized
  std::vector<char> grad_set_;
};

// ---- primitive operations ----
//
// Elementwise binaries accept equal shapes, a single-element operand, or a
// trailing-shape broadcast (one operand's shape equals the other's without
// its leading axis, e.g. [n,d] op [d]).
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor neg(const Tensor& a);
Tensor abs(const Tensor& a);
Tensor relu(const Tensor& a);
Tensor sigmoid(const Tensor& a);
Tensor tanh_op(const Tensor& a);
Tensor log_op(const Tensor& a);
Tensor square(const Tensor& a);

// Softmax along `axis` (default: last). Outputs are positive and sum to 1
// along the axis.
Tensor softmax(const Tensor& a, int axis = -1);

Tensor sum_all(const Tensor& a);
Tensor mean_all(const Tensor& a);
Tensor sum_axis0(const Tensor& a);

// Scales slice i of the leading axis by w[i]; w is 1-D with length a.dim(0).
Tensor scale_slices(const Tensor& a, const Tensor& w);

Tensor concat(const std::vector<Tensor>& parts, int axis = 0);
// Stacks equal-shape tensors along a new leading axis.
Tensor stack(const std::vector<Tensor>& parts);
// Slice [i] of the leading axis (shape drops that axis).
Tensor slice0(const Tensor& a, std::int64_t i);
// Element at flat index i as a scalar tensor.
Tensor pick(const Tensor& a, std::int64_t i);
// Same data, new shape (numel preserved).
Tensor reshape(const Tensor& a, std::vector<std::int64_t> shape);

// a: [m,k], b: [k,n] -> [m,n].
Tensor matmul(const Tensor& a, const Tensor& b);
// x: [din] or [n,din], w: [dout,din], b: [dout] -> [dout] or [n,dout].
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b);

// Inverted dropout: at train time zeroes each unit with probability `rate`
// and scales survivors by 1/(1-rate); in eval mode it is the identity.
Tensor dropout(const Tensor& a, double rate, bool train, Rng& rng);

// x: [cin,h,w] or [n,cin,h,w]; w: [cout,cin,kh,kw]; b: [cout].
Tensor conv2d(const Tensor& x, const Tensor& w, const Tensor& b, int stride, int padding);
// Transposed convolution, the adjoint of conv2d with the same stride/padding.
// x: [cout,h,w] or [n,cout,h,w]; w: [cout,cin,kh,kw]; b: [cin].
// out spatial size = (in-1)*stride - 2*padding + k + output_padding.
Tensor deconv2d(const Tensor& x, const Tensor& w, const Tensor& b, int stride, int padding,
                int output_padding = 0);

// Row `id` of a [v,d] table; backward scatters into the table.
Tensor embed_row(const Tensor& table, std::int64_t id);

}  // namespace dsmn::ad
