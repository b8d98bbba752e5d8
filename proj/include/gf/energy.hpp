#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gf/dynamics.hpp"

namespace gf {

enum class Feature {
  Goal,
  Velocity,
  ReferenceVelocity,
  Acceleration,
  Jerk,
  TurnRate,
  TurnAcceleration,
  VelocityBound,
  AccelerationBound,
  TurnRateBound,
  Lane,
};

std::string feature_name(Feature f);
Feature feature_from_name(const std::string& name);

struct FeatureConfig {
  std::vector<Feature> features = default_features();
  double velocity_bound = 2.0;       // [m/s]
  double acceleration_bound = 1.5;   // [m/s^2]
  double turn_rate_bound = 1.0;      // [rad/s]
  std::optional<double> reference_velocity;  // [m/s]
  std::vector<double> radii;         // [m], one per agent

  /// goal, vel, acc, velb, accb, turnr, turnrb
  static std::vector<Feature> default_features();
  std::size_t count() const noexcept { return features.size(); }
  /// Position of `f` in `features`, or -1.
  int index_of(Feature f) const noexcept;
  void validate(std::size_t agents) const;
};

/// Index of the unordered pair {i, j} among the N(N-1)/2 pairs, row-major over i < j.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t agents);
std::size_t pair_count(std::size_t agents) noexcept;

struct EnergyWeights {
  Tensor own;   // N x F, >= 0
  Tensor pair;  // N(N-1)/2, >= 0
};

/// Energy parameters of one mode.
struct GameParameters {
  EnergyWeights weights;
  Tensor goals;  // N x 2 [m]
  void validate(std::size_t agents, std::size_t features) const;
};

/// The same parameters as tape nodes.
struct ParameterVars {
  ad::Var own;
  ad::Var pair;
  ad::Var goals;
};

ParameterVars bind_inputs(ad::Tape& tape, const GameParameters& p);
ParameterVars bind_constants(ad::Tape& tape, const GameParameters& p);

/// Scene data the energy does not learn: initial states, timing, geometry.
struct GameContext {
  Horizon horizon;
  Tensor x0;  // N x 4
  FeatureConfig features;
  std::vector<Tensor> lanes;  // optional reference polyline (L x 2) per agent, for Feature::Lane

  std::size_t agents() const { return x0.dim(0); }
};

/// One weighted residual block r = w * c and its Jacobian with respect to the
/// flat control vector (agent-major; per agent the K accelerations, then the
/// K turn rates).
struct ResidualGroup {
  Feature feature = Feature::Goal;
  bool pair = false;
  std::size_t agent = 0;   // owning agent, or first agent of the pair
  std::size_t other = 0;   // second agent of the pair
  ad::Var weight;          // scalar
  ad::Var unweighted;      // c
  ad::Var residual;        // w * c
  std::vector<std::size_t> columns;  // flat control indices the block depends on

  // Linear blocks: dc/du = structure, a constant (columns.size() wide).
  bool linear = false;
  Tensor structure;

  // Nonlinear blocks: the nonzero rows of dr/du (weight included).
  ad::Var jacobian;
  std::vector<std::size_t> jacobian_rows;

  bool involves(std::size_t i) const { return agent == i || (pair && other == i); }
};

struct NormalEquations {
  ad::Var jtj;  // n x n
  ad::Var jtr;  // n
};

/// Unweighted own residuals of one agent, concatenated in feature order.
struct TaggedResiduals {
  ad::Var values;
  std::vector<std::size_t> feature_of;  // feature position per component
};

TaggedResiduals own_residuals(const AgentRollout& traj, ad::Var accel, ad::Var omega, ad::Var goal,
                              const FeatureConfig& cfg, double dt, const Tensor* lane = nullptr);

/// max(0, r_i + r_j - |p_i - p_j|) at every step 0..K.
ad::Var pair_residuals(const AgentRollout& a, const AgentRollout& b, double radius_a, double radius_b);

/// The potential-game energy E(u) = 1/2 |r(u)|^2 over all own and pair blocks.
class PotentialGame {
 public:
  explicit PotentialGame(GameContext ctx);

  const GameContext& context() const noexcept { return ctx_; }
  std::size_t agents() const noexcept { return n_; }
  std::size_t steps() const noexcept { return ctx_.horizon.K; }
  /// Length of the flat control vector, N * 2K.
  std::size_t dimension() const noexcept { return n_ * 2 * ctx_.horizon.K; }

  /// Builds every residual block at flat controls `u`. Without Jacobians only
  /// the residual values are recorded.
  std::vector<ResidualGroup> residual_groups(ad::Var u, const ParameterVars& p, bool with_jacobian = true) const;

  /// Stacked residual and E = 1/2 |r|^2.
  ad::Var residual_vector(const std::vector<ResidualGroup>& groups) const;
  ad::Var energy(const std::vector<ResidualGroup>& groups) const;
  /// Own energy of agent i plus every pair energy involving i.
  ad::Var agent_cost(const std::vector<ResidualGroup>& groups, std::size_t agent) const;

  /// Dense dr/du, rows in residual_vector() order.
  ad::Var jacobian(const std::vector<ResidualGroup>& groups) const;
  /// J^T J and J^T r assembled block by block. Groups rejected by `keep` are skipped.
  NormalEquations normal_equations(const std::vector<ResidualGroup>& groups,
                                   const std::function<bool(const ResidualGroup&)>& keep = {}) const;
  /// Same quantities through the dense Jacobian.
  NormalEquations normal_equations_dense(const std::vector<ResidualGroup>& groups) const;

  double energy(const Tensor& controls, const GameParameters& p) const;

 private:
  GameContext ctx_;
  std::size_t n_;
};

/// N x K x 2 controls <-> flat solver layout.
ad::Var flatten_controls(ad::Var controls);
ad::Var unflatten_controls(ad::Var flat, std::size_t agents, std::size_t steps);
Tensor flatten_controls(const Tensor& controls);
Tensor unflatten_controls(const Tensor& flat, std::size_t agents, std::size_t steps);

}  // namespace gf
