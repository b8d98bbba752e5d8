#pragma once

#include <memory>
#include <span>
#include <string>

#include "gf/energy.hpp"

namespace gf {

struct SolverConfig {
  std::size_t steps = 2;  // S
  double alpha = 0.3;     // step size in (0, 1]
  double damping = 10.0;  // additive LM damping

  void validate() const;
};

/// A failure inside the unrolled solver, tagged with the LM step (0-based).
class SolverError : public NumericError {
 public:
  SolverError(const std::string& what, std::size_t step) : NumericError(what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Anything the LM step can linearize: E(u) = 1/2 |r(u)|^2 with J^T J and J^T r on the tape.
class LeastSquaresEnergy {
 public:
  virtual ~LeastSquaresEnergy() = default;
  virtual std::size_t dimension() const = 0;
  virtual NormalEquations linearize(ad::Var u) const = 0;
  virtual ad::Var energy(ad::Var u) const = 0;
};

/// The potential game of one mode over flat controls.
class GameEnergy final : public LeastSquaresEnergy {
 public:
  GameEnergy(const PotentialGame& game, ParameterVars params, bool dense = false)
      : game_(&game), params_(params), dense_(dense) {}
  std::size_t dimension() const override { return game_->dimension(); }
  NormalEquations linearize(ad::Var u) const override;
  ad::Var energy(ad::Var u) const override;

 private:
  const PotentialGame* game_;
  ParameterVars params_;
  bool dense_;
};

/// u + alpha * du with (J^T J + dp I) du = -J^T r, recorded on u's tape.
ad::Var lm_step(const LeastSquaresEnergy& energy, ad::Var u, const SolverConfig& cfg);
/// cfg.steps LM steps on one tape. Throws SolverError naming the failing step.
ad::Var solve(const LeastSquaresEnergy& energy, ad::Var u, const SolverConfig& cfg);

/// Game solves on N x K x 2 controls.
ad::Var solve_game(const PotentialGame& game, ad::Var controls, const ParameterVars& params, const SolverConfig& cfg);
Tensor solve_game(const PotentialGame& game, const Tensor& controls, const GameParameters& params,
                  const SolverConfig& cfg);

/// Plain LM for data generation: damping starts at cfg.damping and adapts
/// (shrinks after a step that lowers the energy, grows and retries otherwise).
/// Stops after cfg.steps steps or once |J^T r| < tolerance.
struct ConvergedSolve {
  Tensor controls;         // N x K x 2
  double gradient_norm;    // |J^T r| at the result
  std::size_t steps = 0;
};
ConvergedSolve solve_until_converged(const PotentialGame& game, const Tensor& controls, const GameParameters& params,
                                     const SolverConfig& cfg, double tolerance = 1e-7);

struct ModeInput {
  ad::Var controls;  // N x K x 2
  ParameterVars params;
};

struct ModeOutput {
  ad::Var controls;  // N x K x 2 on the caller's tape; invalid when the mode failed
  std::string error;
  bool ok() const noexcept { return error.empty(); }
};

/// One solve per mode. Modes run concurrently on child tapes that are then
/// attached to the caller's tape in mode order; a failing mode does not
/// affect the others.
std::vector<ModeOutput> batched_solve(const PotentialGame& game, std::span<const ModeInput> modes,
                                      const SolverConfig& cfg);
/// Same results, one mode after the other.
std::vector<ModeOutput> batched_solve_serial(const PotentialGame& game, std::span<const ModeInput> modes,
                                             const SolverConfig& cfg);

struct NashGapConfig {
  std::size_t refine_steps = 30;
  double alpha = 0.5;
  double damping = 1.0;
};

/// Own energy of `agent` plus every pair energy involving it.
double agent_cost(const PotentialGame& game, const Tensor& controls, const GameParameters& params, std::size_t agent);

/// C_i(u*) minus the lowest C_i found by unilateral LM refinement of agent i's
/// controls with the others held fixed. Never negative: the starting point counts.
double nash_gap(const PotentialGame& game, const Tensor& u_star, const GameParameters& params, std::size_t agent,
                const NashGapConfig& cfg = {});

}  // namespace gf
