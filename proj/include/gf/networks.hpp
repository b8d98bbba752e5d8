#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gf/autodiff/ops.hpp"
#include "gf/energy.hpp"

namespace gf {

struct Scenario;

struct ModelConfig {
  std::size_t agents = 2;           // N
  std::size_t modes = 2;            // M
  std::size_t K = 40;
  std::size_t H = 18;
  std::size_t features = 7;         // F
  std::size_t goal_candidates = 16; // G
  std::size_t latent = 64;          // d_z
  std::size_t width = 64;
  std::size_t decoder_layers = 3;
  std::size_t prob_layers = 2;
  std::size_t prob_stride = 5;      // trajectory subsampling for the probability decoder
  bool goals_given = true;

  void validate() const;
  /// Trajectory steps fed to the probability decoder: stride, 2 stride, ..., and K.
  std::vector<std::size_t> prob_steps() const;
};

/// Named parameter tensors in a fixed order.
class ModelParams {
 public:
  /// Xavier-uniform weights, zero biases.
  static ModelParams init(const ModelConfig& cfg, std::uint64_t seed);

  std::size_t size() const noexcept { return tensors_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const Tensor& tensor(std::size_t i) const { return tensors_.at(i); }
  Tensor& tensor(std::size_t i) { return tensors_.at(i); }
  const Tensor& at(const std::string& name) const;
  /// Index of `name`, or size() when absent.
  std::size_t find(const std::string& name) const;
  void add(std::string name, Tensor t);
  std::size_t parameter_count() const;
  bool all_finite() const;

  bool operator==(const ModelParams& o) const;

 private:
  std::vector<std::string> names_;
  std::vector<Tensor> tensors_;
};

/// Parameters recorded on a tape.
class Network {
 public:
  /// As inputs (differentiable) or constants.
  Network(ad::Tape& tape, const ModelConfig& cfg, const ModelParams& params, bool differentiable = true);
  /// Already recorded variables, one per parameter tensor in order.
  Network(ad::Tape& tape, const ModelConfig& cfg, const ModelParams& params, std::vector<ad::Var> vars);

  const ModelConfig& config() const noexcept { return *cfg_; }
  ad::Tape& tape() const noexcept { return *tape_; }
  ad::Var var(const std::string& name) const;
  const std::vector<ad::Var>& vars() const noexcept { return vars_; }
  /// tanh hidden layers, linear output; input rows are samples.
  ad::Var mlp(const std::string& prefix, ad::Var x) const;

 private:
  ad::Tape* tape_;
  const ModelConfig* cfg_;
  const ModelParams* params_;
  std::vector<ad::Var> vars_;
};

struct Observation {
  Tensor histories;        // N x H x 2
  Tensor goal_candidates;  // N x G x 2 (may be empty when goals are given)
  Tensor goals;            // N x 2 (empty unless goals are given)
  Tensor x0;               // N x 4

  static Observation from(const Scenario& s);
  void validate(const ModelConfig& cfg) const;
};

/// N x d_z latents: per-agent MLP over the history relative to its last
/// position, then one residual scaled dot-product attention layer.
ad::Var encode_observation(const Network& net, const Observation& obs);

struct DecodedParameters {
  std::vector<ParameterVars> modes;      // M game parameter sets
  std::vector<ad::Var> init;             // M initial strategies, N x K x 2
  ad::Var goal_logits;                   // N x G; invalid when goals are given
  std::vector<std::vector<std::size_t>> selected;  // N x M chosen candidates, most probable first
};

/// Indices of the `m` largest logits, largest first (ties by index).
std::vector<std::size_t> top_m(std::span<const double> logits, std::size_t m);

DecodedParameters decode_parameters(const Network& net, ad::Var z, const Observation& obs);

/// Input: per mode N x (K+1) x 4 trajectories. Output: M probabilities.
ad::Var decode_scene_logits(const Network& net, ad::Var z, std::span<const ad::Var> trajectories,
                            const Observation& obs);
ad::Var decode_scene_probabilities(const Network& net, ad::Var z, std::span<const ad::Var> trajectories,
                                   const Observation& obs);

}  // namespace gf
