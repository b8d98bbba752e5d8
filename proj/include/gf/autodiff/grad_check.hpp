#pragma once

#include <functional>

#include "gf/autodiff/tape.hpp"

namespace gf::ad {

struct GradCheckReport {
  double max_rel_error = 0.0;
  std::size_t worst_index = 0;
  double analytic = 0.0;
  double numeric = 0.0;
};

/// Scalar function of one tensor, recorded on the given tape.
using TapeFunction = std::function<Var(Tape&, Var)>;

/// Relative error used by the checks: |a - n| / max(|a|, |n|, floor).
double relative_error(double analytic, double numeric, double floor = 1e-4);

/// Compares backward() against central differences, component by component.
/// Large errors are reported, never thrown.
GradCheckReport grad_check(const TapeFunction& f, const Tensor& x, double eps = 1e-6);

}  // namespace gf::ad
