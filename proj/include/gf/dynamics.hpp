#pragma once

#include <cstddef>

#include "gf/autodiff/ops.hpp"

namespace gf {

/// Dynamically-extended unicycle state. Heading accumulates and is never wrapped.
struct AgentState {
  double x = 0.0;      // [m]
  double y = 0.0;      // [m]
  double v = 0.0;      // [m/s]
  double theta = 0.0;  // [rad]
};

struct AgentControl {
  double a = 0.0;      // [m/s^2]
  double omega = 0.0;  // [rad/s]
};

struct Horizon {
  std::size_t K = 40;   // prediction steps
  double dt = 0.1;      // [s]
  std::size_t H = 18;   // history steps

  double length() const noexcept { return static_cast<double>(K) * dt; }
  void validate() const;
};

/// One explicit Euler step of the unicycle.
AgentState step(const AgentState& s, const AgentControl& u, double dt) noexcept;

/// Row i of an N x 4 state tensor.
AgentState agent_state(const Tensor& x0, std::size_t agent);

/// Joint rollout: x0 (N x 4), controls (N x K x 2) -> states (N x (K+1) x 4).
Tensor unroll(const Tensor& x0, const Tensor& controls, const Horizon& h);

/// Taped rollout of one agent. x, y, v, theta have K+1 entries; the cos/sin
/// and speed vectors cover the K headings/speeds that drive the positions.
struct AgentRollout {
  ad::Var x, y, v, theta;
  ad::Var speed_head;  // v_0 .. v_{K-1}
  ad::Var cos_head;    // cos(theta_0) .. cos(theta_{K-1})
  ad::Var sin_head;
};

AgentRollout unroll_agent(ad::Tape& tape, const AgentState& x0, ad::Var accel, ad::Var omega, double dt);

/// Taped joint rollout; d(states)/d(controls) is available through the tape.
ad::Var unroll(const Tensor& x0, ad::Var controls, const Horizon& h);

/// Extrapolates the last observed displacement of an H x 2 history for K steps.
Tensor constant_velocity_rollout(const Tensor& history, const Horizon& h);

}  // namespace gf
