#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vdc/sim.hpp"

// Batch commands behind the vdc command-line tool. Each returns the process
// exit code and writes human-readable output to `out`, problems to `err`.
namespace vdc::cli {

struct ExperimentManifest {
  Scenario scenario = Scenario::ExoPose;
  std::filesystem::path robot_config;
  std::filesystem::path sim_config;
  std::filesystem::path output_dir;
  int repetitions = 1;
  std::uint64_t seed = 1;
};

/// Relative paths are resolved against `base_dir`.
ExperimentManifest parse_manifest(const nlohmann::json& j, const std::filesystem::path& base_dir);
ExperimentManifest load_manifest(const std::filesystem::path& path);

/// Empty when every referenced file exists and validates.
std::vector<std::string> validate_manifest(const ExperimentManifest& m);

/// Adaptation parameters to choose for a chain of n rigid bodies.
struct TuningReport {
  int bodies = 0;
  int nal_gains = 1;        // gamma
  int nal_joint_gains = 1;  // gamma_a
  int projection_gains = 0;   // 13 n
  int projection_bounds = 0;  // 26 n
};

TuningReport tuning_report(int bodies);
std::string format_tuning_report(const TuningReport& r);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for a single value
};
MeanStd mean_std(const std::vector<double>& v);

int cmd_validate(const std::vector<std::string>& paths, std::ostream& out, std::ostream& err);
int cmd_run(const std::string& manifest_path, std::ostream& out, std::ostream& err);
int cmd_report(const std::vector<std::string>& log_paths, std::ostream& out, std::ostream& err);

}  // namespace vdc::cli
