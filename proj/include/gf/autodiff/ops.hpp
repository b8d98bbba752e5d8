#pragma once

#include <memory>
#include <span>
#include <vector>

#include "gf/autodiff/tape.hpp"

namespace gf::ad {

// Elementwise binary ops accept equal shapes or a size-1 operand (broadcast).
Var operator+(Var a, Var b);
Var operator-(Var a, Var b);
Var operator*(Var a, Var b);
Var operator/(Var a, Var b);
Var operator-(Var a);
Var operator*(double s, Var a);
Var operator*(Var a, double s);
Var operator+(Var a, double s);
Var operator-(Var a, double s);

Var scale(Var a, double s);
Var shift(Var a, double s);

/// X (R x C) + b (C), b broadcast over rows.
Var add_bias(Var x, Var b);
/// (m x k) * (k x n) or (m x k) * (k).
Var matmul(Var a, Var b);
Var transpose(Var a);
Var sum(Var a);
Var mean(Var a);

Var square(Var a);
Var sqrt(Var a);
Var exp(Var a);
Var log(Var a);
Var tanh(Var a);
Var relu(Var a);
Var softplus(Var a);
/// max(0, x); the subgradient at 0 is 0.
Var max0(Var a);
Var cos(Var a);
Var sin(Var a);

/// Over all entries for rank 1, row-wise for rank 2.
Var softmax(Var a);
Var log_softmax(Var a);

/// Concatenation along axis 0 (rank 1 or 2) or axis 1 (rank 2).
Var concat(std::span<const Var> parts, std::size_t axis = 0);
Var concat(std::initializer_list<Var> parts, std::size_t axis = 0);

/// out.flat[i] = a.flat[index[i]], reshaped to `shape`.
Var gather(Var a, std::vector<std::size_t> index, Shape shape);
/// Elements [begin, end) of a rank-1 tensor, or rows [begin, end) of a rank-2 one.
Var slice(Var a, std::size_t begin, std::size_t end);
Var row(Var a, std::size_t r);
Var rows(Var a, std::span<const std::size_t> selected);
Var column(Var a, std::size_t c);
Var reshape(Var a, Shape shape);

/// Inclusive running sum of a rank-1 tensor (from the back when reverse).
Var cumsum(Var a, bool reverse = false);

/// X_rc * v_r.
Var scale_rows(Var x, Var v);
/// X_rc * v_c.
Var scale_cols(Var x, Var v);

/// For f of length K: out(n, j) = sum of f_k over j < k <= n, a K x K
/// lower-triangular matrix. These are the control sensitivities of
/// single-shooting positions.
Var interval_sums(Var f);

struct Placement {
  Var block;
  std::vector<std::size_t> rows;  // destination index of each block row (or element)
  std::vector<std::size_t> cols;  // destination column of each block column (rank-2 only)
};
/// Zero tensor of `shape` with every placement scatter-added into it.
Var scatter_add(Shape shape, std::span<const Placement> placements);

/// Solves A x = b for SPD A via Cholesky; differentiable in A and b.
Var solve_spd(Var a, Var b);

/// Embeds a recorded child tape as one node: the output equals the child's
/// `sub_output`, with `sub_inputs[k]` of the child bound to `args[k]`.
Var call(std::span<const Var> args, std::shared_ptr<const Tape> sub,
         std::vector<NodeId> sub_inputs, NodeId sub_output);

}  // namespace gf::ad
