#pragma once

#include <span>
#include <string>
#include <vector>

#include "gf/autodiff/tensor.hpp"

namespace gf {

struct DisplacementMetrics {
  double min_ade = 0.0;
  double min_fde = 0.0;
  double min_sade = 0.0;
  double min_sfde = 0.0;
};

/// pred: M x N x K x 2, gt: N x K x 2.
/// Marginal metrics take the best mode per agent, scene metrics one best mode for all agents.
DisplacementMetrics displacement_metrics(const Tensor& pred, const Tensor& gt);

/// Against multi-modal ground truth (G x N x K x 2): the ground-truth mode with
/// the lowest minSADE is used for all four metrics.
struct PairedMetrics {
  DisplacementMetrics metrics;
  std::size_t gt_mode = 0;
};
PairedMetrics displacement_metrics_multi(const Tensor& pred, const Tensor& gt_modes);

/// Scene error of one joint mode: mean over agents and steps of the L2 error.
double scene_ade(const Tensor& pred, std::size_t mode, const Tensor& gt, std::size_t gt_mode = 0);

/// True if any pair of agents of a joint prediction (N x K x 2) comes closer
/// than the sum of their radii at any step.
bool has_overlap(const Tensor& joint, std::span<const double> radii);

/// Index of the most probable mode (first on ties).
std::size_t most_likely(std::span<const double> probabilities);

/// Joint modes from per-agent marginal predictions (N x M x K x 2 with N x M
/// probabilities): joint mode m pairs every agent's m-th most probable mode.
Tensor marginal_to_joint(const Tensor& marginals, const Tensor& probabilities);

struct SampleMetrics {
  DisplacementMetrics displacement;
  bool overlap = false;
};

SampleMetrics sample_metrics(const Tensor& pred, std::span<const double> probabilities, const Tensor& gt_modes,
                             std::span<const double> radii);

struct MetricsReport {
  double min_ade = 0.0;
  double min_fde = 0.0;
  double min_sade = 0.0;
  double min_sfde = 0.0;
  double overlap_rate = 0.0;
  std::size_t samples = 0;
};

/// Means over samples; the overlap rate is the fraction of overlapping samples.
MetricsReport summarize(std::span<const SampleMetrics> samples);

std::string to_json(const MetricsReport& r);
/// Method name -> report, as a fixed-width text table.
std::string metrics_table(const std::vector<std::pair<std::string, MetricsReport>>& rows);

}  // namespace gf
