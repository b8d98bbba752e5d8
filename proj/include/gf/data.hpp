#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf/game_solver.hpp"

namespace gf {

enum class Split { Train, Val, Test };
std::string split_name(Split s);
Split split_from_name(const std::string& name);

/// One sample: observed histories and the multi-modal future that followed.
struct Scenario {
  Tensor histories;        // N x H x 2
  Tensor gt_futures;       // M_gt x N x K x 2
  Tensor gt_controls;      // M_gt x N x K x 2 (empty when unknown)
  Tensor goals;            // N x 2 (empty when only candidates are known)
  Tensor goal_candidates;  // N x G x 2 (empty when absent)
  Tensor x0;               // N x 4 (empty: derived from the history tail)
  std::vector<double> radii;
  double dt = 0.1;
  std::size_t H = 0, K = 0;
  std::int64_t main_game = -1;
  double collision_weight = 0.0;
  Split split = Split::Train;

  std::size_t agents() const { return histories.dim(0); }
  std::size_t gt_modes() const { return gt_futures.dim(0); }
  /// Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
  /// x0 if stored, otherwise position, speed and heading of the last history step.
  Tensor initial_state() const;
};

struct Dataset {
  std::vector<Scenario> scenarios;
  std::uint64_t seed = 0;

  std::vector<const Scenario*> split(Split s) const;
};

struct GenerationConfig {
  std::size_t main_games = 8;
  std::size_t inits = 8;               // R solves per (sub)game
  std::size_t modes = 2;               // M_gt clusters
  double circle_radius = 3.0;          // [m]
  double collision_weight_min = 2.0;
  double collision_weight_max = 8.0;
  double agent_radius = 0.25;          // [m]
  double speed_min = 0.8, speed_max = 1.2;  // initial speeds [m/s]
  double init_noise = 0.3;             // std of random initial controls
  std::size_t max_subgames = 60;
  double goal_tolerance = 0.5;         // [m]
  double mode_merge_tolerance = 0.1;   // [m] RMS; closer representatives are merged
  double gradient_tolerance = 1e-3;    // solutions with a larger |J^T r| are discarded
  std::size_t goal_candidates = 16;    // points on the goal circle per agent
  double val_fraction = 0.1, test_fraction = 0.1;
  std::size_t max_resamples = 10;
  Horizon horizon{40, 0.1, 18};
  SolverConfig solver{50, 1.0, 1.0};
  FeatureConfig features;              // radii are filled in per game
  std::vector<double> own_weights{1.0, 0.1, 0.5, 5.0, 5.0, 0.5, 5.0};

  void validate() const;
};

/// Robot crossing a circle against a pedestrian; only the collision weight and
/// the pedestrian's placement are random.
struct MainGame {
  GameContext context;
  GameParameters params;
  double pedestrian_angle = 0.0;
};

MainGame sample_main_game(const GenerationConfig& cfg, std::mt19937_64& rng);

/// Random initial controls, N x K x 2, normal with std cfg.init_noise.
Tensor random_controls(const GenerationConfig& cfg, std::size_t agents, std::mt19937_64& rng);

struct Clustering {
  std::vector<std::size_t> representatives;  // index into the solutions, one per cluster
  std::vector<std::size_t> sizes;            // members per cluster
};

/// k-means over flattened trajectories (10 seeded restarts); each cluster is
/// represented by its member closest to the centroid. Clusters are ordered by
/// size, then by representative index. With fewer distinct solutions than k
/// the leading representatives are repeated.
Clustering cluster_strategies(const std::vector<Tensor>& solutions, std::size_t k, std::uint64_t seed,
                              std::size_t restarts = 10);

/// Counter-based seed derivation.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Scenarios of one main game, in emission order.
std::vector<Scenario> generate_main_game(const GenerationConfig& cfg, std::uint64_t seed, std::int64_t index);

Dataset generate_rpi_dataset(const GenerationConfig& cfg, std::uint64_t seed);

class DatasetError : public std::runtime_error {
 public:
  DatasetError(std::size_t line, const std::string& field, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", field '" + field + "': " + what),
        line_(line),
        field_(field) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& line, std::size_t line_number = 1);
void write_dataset(const Dataset& ds, const std::filesystem::path& path);
Dataset read_dataset(const std::filesystem::path& path);

}  // namespace gf
