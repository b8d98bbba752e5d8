#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "gf/autodiff/tensor.hpp"

namespace gf::ad {

using NodeId = std::uint32_t;

enum class Op : std::uint8_t {
  Leaf,
  Add,
  Sub,
  Mul,
  Div,
  AddBias,
  Scale,
  Shift,
  MatMul,
  Transpose,
  Sum,
  Square,
  Sqrt,
  Exp,
  Log,
  Tanh,
  Relu,
  Softplus,
  Max0,
  Cos,
  Sin,
  Softmax,
  LogSoftmax,
  Concat,
  Gather,
  Reshape,
  Cumsum,
  ScaleRows,
  ScaleCols,
  IntervalSum,
  ScatterAdd,
  SolveSpd,
  Call,
};

const char* op_name(Op op) noexcept;

class Tape;

struct Node {
  Op op = Op::Leaf;
  bool requires_grad = false;
  std::vector<NodeId> inputs;
  Tensor value;
  double c = 0.0;  // Scale/Shift constant, Cumsum direction, Concat axis
  Shape shape;     // target shape for Gather/Reshape/ScatterAdd
  std::vector<std::size_t> index;              // Gather source indices
  std::vector<std::vector<std::size_t>> maps;  // ScatterAdd placements, (rows, cols) per input
  Tensor saved;                                // SolveSpd Cholesky factor
  std::shared_ptr<const Tape> sub;             // Call: recorded child tape
  std::vector<NodeId> sub_inputs;
  NodeId sub_output = 0;
};

/// Handle to a node on a tape. Cheap to copy; valid while its tape lives.
class Var {
 public:
  Var() = default;
  Var(Tape* tape, NodeId id) : tape_(tape), id_(id) {}

  Tape& tape() const { return *tape_; }
  NodeId id() const noexcept { return id_; }
  bool valid() const noexcept { return tape_ != nullptr; }
  const Tensor& value() const;
  const Shape& shape() const { return value().shape(); }
  std::size_t size() const { return value().size(); }
  double item() const { return value().item(); }

 private:
  Tape* tape_ = nullptr;
  NodeId id_ = 0;
};

/// Append-only record of tensor operations. Inputs of a node always precede
/// it, so the node order is a topological order. Single owner: build and
/// sweep on one thread; use separate tapes for concurrent work.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  /// Differentiable leaf.
  Var input(Tensor value);
  /// Leaf excluded from the reverse sweep.
  Var constant(Tensor value);

  std::size_t size() const noexcept { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  const Tensor& value(NodeId id) const { return nodes_[id].value; }

  /// Evaluates `node` from its inputs and appends it.
  Var record(Node node);

  /// Re-evaluates every node with some leaf values replaced. Structural
  /// choices made at record time (active sets, selections) are kept.
  std::vector<Tensor> replay(std::span<const std::pair<NodeId, Tensor>> leaf_overrides = {}) const;

 private:
  std::vector<Node> nodes_;
};

/// dOutput/dNode for every node of a tape after one reverse sweep.
class Gradients {
 public:
  Gradients(const Tape& tape, std::vector<Tensor> grads) : tape_(&tape), grads_(std::move(grads)) {}

  /// Zero tensor of the node's shape when the node does not reach the output.
  Tensor operator[](Var v) const { return at(v.id()); }
  Tensor at(NodeId id) const;
  bool reached(NodeId id) const { return id < grads_.size() && !grads_[id].empty(); }

 private:
  const Tape* tape_;
  std::vector<Tensor> grads_;
};

/// Reverse sweep from a scalar output.
Gradients backward(Var output);

/// Reverse sweep seeded with an arbitrary cotangent of the output's shape.
Gradients backward(const Tape& tape, NodeId output, const Tensor& seed);

namespace detail {
// Forward evaluation of a non-leaf node; fills node.value (and node.saved).
void evaluate(Node& node, std::span<const Tensor* const> inputs);
}  // namespace detail

}  // namespace gf::ad
