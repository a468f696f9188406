#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "vdc/controller.hpp"
#include "vdc/dynamics.hpp"

namespace vdc {

enum class Scenario { ExoPose, RrrCompare };
Scenario parse_scenario(const std::string& s);
std::string to_string(Scenario s);

Integrator parse_integrator(const std::string& s);
std::string to_string(Integrator i);

/// Sinusoidal force on every inertial axis at the tip, zero moment.
struct DisturbanceSpec {
  bool enabled = false;
  double amplitude_n = 5.0;
  double frequency_hz = 0.5;
};

/// amplitude * sin(2 pi f t) on x, y and z; zero wrench when disabled.
SpatialWrench disturbance(const DisturbanceSpec& spec, double t);

struct SimConfig {
  Scenario scenario = Scenario::ExoPose;
  double dt_s = 1e-3;
  double duration_s = 10.0;
  Integrator integrator = Integrator::RK4;
  AdapterSettings adapter;
  // Per-link overrides are not exposed; scalar gains apply to every link/joint.
  Vec6 xi = Vec6::Constant(25.0);
  Vec6 K_B_diag = Vec6::Constant(1.2);
  double k_a = 0.1;
  double gamma = 10.0;
  double gamma_a = 10.0;
  double clik_damping = 1e-3;
  double joint_position_gain = 25.0;
  /// Initial estimate: see initial_estimate(); motors start at scale * I_m.
  double estimate_scale = 0.5;
  DisturbanceSpec disturbance;
  /// Empty: home (exo-pose) or zero (rrr-compare), plus the seeded perturbation.
  std::vector<double> initial_q_rad;
  std::vector<double> initial_qd_radps;
  double perturbation_rad = 0.1;
  std::uint64_t seed = 1;
  double transient_cutoff_s = 2.0;
  /// Cartesian targets (absolute, inertial frame) for exo-pose.
  std::vector<WaypointTrajectory::Segment> segments;
  /// q_d = amplitude * sin(frequency * t) per joint for rrr-compare.
  double joint_amplitude_rad = 1.0;
  double joint_frequency_radps = 1.0;

  ControllerGains gains(int dof) const;
};

/// Throws std::runtime_error naming the offending key.
SimConfig parse_sim_config(const nlohmann::json& j);
SimConfig load_sim_config(const std::string& path);
/// Problems with the numbers in a parsed config (empty when valid). Lengths
/// tied to the robot are skipped when dof <= 0.
std::vector<std::string> validate_sim_config(const SimConfig& cfg, int dof);

struct RunSummary {
  std::size_t samples = 0;  // after the cutoff
  double cutoff_s = 0.0;
  double pos_rmse_mm = 0.0;
  double ori_rmse_deg = 0.0;
  std::vector<double> joint_rmse_rad;
  std::vector<double> joint_max_abs_rad;  // after the cutoff
};

/// Uniformly sampled time series; one row per control tick.
struct RunLog {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  RunSummary summary;

  int column_index(const std::string& name) const;  // -1 if absent
  std::vector<double> column(const std::string& name) const;
  int dof() const;  // number of q_i columns
};

/// Root mean square of `values` over samples with t >= cutoff.
/// Throws std::invalid_argument if no sample qualifies.
double rmse(const std::vector<double>& t, const std::vector<double>& values, double cutoff_s);

/// Tracking RMSEs recomputed from the logged series. All zero, with
/// samples == 0, when no tick reaches the cutoff.
RunSummary summarize(const RunLog& log, double cutoff_s);

/// Mass and first moment scaled by `scale`, inertia reduced to its scaled
/// diagonal; the exact parameters when scale == 1. Throws
/// std::invalid_argument if a guess is not physically consistent.
std::vector<InertialParams> initial_estimate(const std::vector<InertialParams>& truth, double scale);

/// Initial joint state of repetition `rep`: base configuration plus a uniform
/// perturbation in [-perturbation, perturbation] drawn from seed + rep.
JointState initial_state(const RobotModel& model, const SimConfig& cfg, int rep);

/// Interleaves controller and plant at dt. Throws std::runtime_error when the
/// state becomes non-finite.
RunLog run_scenario(const RobotModel& model, const SimConfig& cfg, int rep = 0);

/// Header row plus one row per tick, "." decimal point, 17 significant digits.
void write_csv(const RunLog& log, const std::string& path);
/// Throws std::runtime_error on malformed content (with the line number).
RunLog read_csv(const std::string& path);

nlohmann::json summary_to_json(const RunSummary& s);
RunSummary summary_from_json(const nlohmann::json& j);

}  // namespace vdc
