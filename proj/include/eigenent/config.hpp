#pragma once

// Experiment configuration. Stored as a JSON document; every key is optional
// (defaults depend on the experiment) and unknown keys are rejected.

#include <cstdint>
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace eigenent {

struct Coupling {
  double g = 1.05;
  double h = 0.5;

  friend bool operator==(const Coupling&, const Coupling&) = default;
};

struct DisorderConfig {
  double w = 0.2;
  int seeds = 5;
  int n = 10;
  int m = 5;
  double min_gap = 0.01;

  friend bool operator==(const DisorderConfig&, const DisorderConfig&) = default;
};

struct SizeCaps {
  int dense = 12;
  int sector = 14;
  int model_m = 16;

  friend bool operator==(const SizeCaps&, const SizeCaps&) = default;
};

struct ExperimentConfig {
  std::string experiment = "figure1";
  std::vector<Coupling> couplings;
  std::vector<int> n_values;
  std::vector<int> m_values;
  std::vector<double> f_values;
  DisorderConfig disorder;
  std::uint64_t seed = 1;
  std::size_t samples_per_sector = 100;
  std::size_t trials = 2000;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> page_grid;
  std::string output_dir = "results";
  int threads = 1;
  SizeCaps caps;
  double tightness_band = 3.0;
  bool write_records = false;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

inline const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"figure1", "bounds", "modelm", "page", "quadcheck"};
  return names;
}

// Defaults for one of experiment_names(); throws ConfigError otherwise.
ExperimentConfig default_config(const std::string& experiment);

nlohmann::json to_json(const ExperimentConfig& config);
// Keys absent from `j` keep the experiment's defaults.
ExperimentConfig config_from_json(const nlohmann::json& j);

ExperimentConfig load_config(const std::string& path);
void save_config(const std::string& path, const ExperimentConfig& config);

// Cross-field checks (even n for figure1, sample floors, caps, ...).
void validate(const ExperimentConfig& config);

}  // namespace eigenent
