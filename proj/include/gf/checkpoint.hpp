#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "gf/networks.hpp"
#include "json.hpp"

namespace gf {

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const ModelConfig& c);
/// Missing keys keep their defaults; unknown keys are rejected.
ModelConfig model_config_from_json(const nlohmann::json& j);

struct Checkpoint {
  ModelConfig model;
  ModelParams params;
  nlohmann::json run;  // free-form run configuration stored alongside
};

/// Writes `path` (JSON manifest: names, shapes, byte offsets) and `path` + ".bin"
/// (little-endian float64 values, tensors back to back).
void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace gf
