#pragma once

#include "gf/autodiff/tensor.hpp"

// Plain (untaped) dense kernels shared by the tape ops and by callers that
// only need values.
namespace gf::linalg {

// (m x k) * (k x n), or (m x k) * (k) -> (m).
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);

// Lower-triangular L with A = L L^T. Throws NotPositiveDefinite.
Tensor cholesky(const Tensor& a);

// Solves L L^T x = b for b of shape (n) or (n x k).
Tensor cholesky_solve(const Tensor& l, const Tensor& b);

// Gram matrix S^T S, skipping structurally zero entries of S.
Tensor gram(const Tensor& s);

}  // namespace gf::linalg
