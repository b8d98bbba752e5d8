#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gf/checkpoint.hpp"
#include "gf/data.hpp"
#include "gf/game_solver.hpp"
#include "gf/metrics.hpp"
#include "gf/networks.hpp"

namespace gf {

struct AdamConfig {
  double lr = 5e-5;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct LossWeights {
  double imit = 1.0;  // lambda_1
  double goal = 0.1;  // lambda_2, forced to 0 when goals are given
  double prob = 0.1;  // lambda_3
};

struct RunConfig {
  Horizon horizon;
  ModelConfig model;        // K, H and feature count follow horizon and features
  SolverConfig solver;      // steps == 0: initialization only
  LossWeights loss;
  AdamConfig adam;
  std::size_t batch_size = 32;
  std::size_t epochs = 50;
  FeatureConfig features;
  GenerationConfig generation;
  std::uint64_t seed = 0;
  bool deterministic = false;
  std::optional<std::size_t> max_train_samples;  // use only the first n training samples
  std::string log_path;                           // JSON lines; empty: no log file

  /// Applies horizon/feature settings to the model config and checks everything.
  void finalize();
  void validate() const;
  double goal_weight() const noexcept { return model.goals_given ? 0.0 : loss.goal; }
};

/// Missing keys keep defaults; unknown keys are rejected.
RunConfig run_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& c);
RunConfig load_run_config(const std::filesystem::path& path);
GenerationConfig generation_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GenerationConfig& c);
nlohmann::json to_json(const FeatureConfig& c);
FeatureConfig feature_config_from_json(const nlohmann::json& j);

enum class Method { Full, Initialization, ConstantVelocity, NoInit, NoGoal };
std::string method_name(Method m);
Method method_from_name(const std::string& name);

struct ForwardOptions {
  std::optional<std::size_t> steps;  // overrides the solver's S (0 skips the solver)
  bool zero_init = false;            // start every mode from zero controls
  bool no_goal = false;              // goal feature weight forced to 0
  bool parallel_modes = true;
};

/// Everything one forward pass records on a tape.
struct ForwardPass {
  ad::Var latents;                     // N x d_z
  DecodedParameters decoded;
  std::vector<ad::Var> controls;       // M x (N x K x 2), after the solver
  std::vector<ad::Var> trajectories;   // M x (N x (K+1) x 4)
  ad::Var prob_logits;                 // M
  ad::Var probabilities;               // M
};

/// Agents rolled out from uniform random controls in [-control_scale, control_scale]
/// (0: straight at constant speed) with constant-velocity histories ending at x0.
/// Candidate 0 of every agent is its ground-truth endpoint.
Scenario synthetic_scenario(std::mt19937_64& rng, const RunConfig& cfg, double control_scale = 0.3,
                            std::size_t gt_modes = 1);

/// The game of one scenario under the run's features (radii from the scenario).
PotentialGame scenario_game(const Scenario& s, const RunConfig& cfg);

/// Throws NumericError naming the mode if a solve fails.
ForwardPass forward(const Network& net, const Scenario& s, const RunConfig& cfg, const ForwardOptions& opt = {});

struct LossParts {
  double imit = 0.0, goal = 0.0, prob = 0.0, total = 0.0;
  std::size_t best_mode = 0;  // predicted mode closest to the paired ground truth
  std::size_t gt_mode = 0;    // ground-truth mode paired with the prediction
};

struct Loss {
  ad::Var total;
  LossParts parts;
};

/// lambda-weighted multi-task loss. trajectories: M x (N x (K+1) x 4) on one tape.
Loss compute_loss(std::span<const ad::Var> trajectories, ad::Var prob_logits, ad::Var goal_logits,
                  const Scenario& s, const RunConfig& cfg);
Loss compute_loss(const ForwardPass& f, const Scenario& s, const RunConfig& cfg);
double combine_loss(const LossParts& parts, const LossWeights& w);

/// M x N x K x 2 positions of the M trajectories (steps 1..K).
Tensor positions(std::span<const ad::Var> trajectories);

struct ForecastResult {
  Tensor U;   // M x N x K x 2
  Tensor X;   // M x N x (K+1) x 4
  Tensor PR;  // M
};
ForecastResult predict(const Checkpoint& ckpt, const RunConfig& cfg, const Scenario& s,
                       const ForwardOptions& opt = {});
std::string forecast_to_json(const ForecastResult& r);

class TrainingError : public std::runtime_error {
 public:
  TrainingError(const std::string& what, std::size_t epoch, std::size_t batch)
      : std::runtime_error(what), epoch_(epoch), batch_(batch) {}
  std::size_t epoch() const noexcept { return epoch_; }
  std::size_t batch() const noexcept { return batch_; }

 private:
  std::size_t epoch_, batch_;
};

struct EpochLog {
  std::size_t epoch = 0;
  double train_loss = 0.0;  // mean over the epoch's batches, before each update
  double val_loss = 0.0;
  double val_min_sade = 0.0;
  bool best = false;
};

struct TrainResult {
  Checkpoint checkpoint;       // best on validation (last epoch when there is no validation split)
  std::vector<EpochLog> epochs;
  double initial_loss = 0.0;   // mean loss on the monitoring set before training
  double final_loss = 0.0;     // same set, final parameters
  std::size_t updates = 0;
};

struct AdamState {
  std::vector<Tensor> m, v;
  std::size_t step = 0;
};
void adam_update(ModelParams& params, AdamState& state, const std::vector<Tensor>& grads, const AdamConfig& cfg);

/// Mean loss and gradient over a batch. Per-sample tapes run in parallel unless
/// cfg.deterministic; summation is always in sample order.
struct BatchGradient {
  double loss = 0.0;
  std::vector<Tensor> grads;
};
BatchGradient batch_gradient(const ModelParams& params, const RunConfig& cfg,
                             std::span<const Scenario* const> batch);
double mean_loss(const ModelParams& params, const RunConfig& cfg, std::span<const Scenario* const> samples);

using EpochCallback = std::function<void(const EpochLog&)>;
TrainResult train(const RunConfig& cfg, const Dataset& data, const EpochCallback& on_epoch = {});

std::string to_json(const EpochLog& e);

struct MethodReport {
  Method method;
  MetricsReport report;
};
std::vector<SampleMetrics> evaluate_samples(const Checkpoint& ckpt, const RunConfig& cfg,
                                            std::span<const Scenario* const> samples, Method method);
std::vector<MethodReport> evaluate(const Checkpoint& ckpt, const RunConfig& cfg, const Dataset& data, Split split,
                                   std::span<const Method> methods);
std::string evaluation_json(const std::vector<MethodReport>& reports);

struct TensorGradCheck {
  std::string name;
  double max_rel_error = 0.0;
  double analytic = 0.0, numeric = 0.0;  // at the worst component
};
/// Central finite differences of the total loss with respect to every
/// parameter tensor, on one synthetic scenario (two ground-truth modes).
std::vector<TensorGradCheck> end_to_end_grad_check(const RunConfig& cfg, std::uint64_t seed, double eps = 1e-6);

struct ForwardTiming {
  std::size_t agents = 0, modes = 0, steps = 0;
  double mean_ms = 0.0, min_ms = 0.0;
};
/// Wall time of one full forward pass (encode, decode, M solves, probabilities)
/// on a synthetic scenario with `base`'s horizon and widths.
ForwardTiming time_forward(const RunConfig& base, std::size_t agents, std::size_t modes, std::size_t steps,
                           std::size_t repeats, bool parallel_modes = true);

}  // namespace gf
