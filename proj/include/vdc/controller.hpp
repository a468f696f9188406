#pragma once

#include <variant>
#include <vector>

#include "vdc/adaptation.hpp"
#include "vdc/kinematics.hpp"

// Decentralized control of a serial chain: every link and every joint is a
// subsystem with its own control law, connected through required
// velocities/forces at the cutting points B_i and T_i.
namespace vdc {

/// Per-link motion quantities. T has n + 1 entries, T[0] being the ground.
struct ChainMotion {
  std::vector<SpatialVelocity> B;
  std::vector<SpatialVelocity> T;
};

/// Per-link wrenches. T[n] is the tip boundary, T[0] what joint 1 applies to
/// the ground.
struct ChainForces {
  std::vector<SpatialWrench> B;
  std::vector<SpatialWrench> T;
};

/// ^{B_i}V = U^T ^{T_{i-1}}V + kappa_i qd_i, ^{T_i}V = ^{B_i}U_{T_i}^T ^{B_i}V.
ChainMotion propagate_velocities(const RobotModel& model, const Eigen::VectorXd& q,
                                 const Eigen::VectorXd& joint_rates,
                                 const SpatialVelocity& ground = {});

/// Time derivative of the body coordinates of `velocities` (propagated with
/// any joint-rate vector), where the frames move with the measured rates `qd`.
ChainMotion propagate_accelerations(const RobotModel& model, const Eigen::VectorXd& q,
                                    const Eigen::VectorXd& qd, const ChainMotion& velocities,
                                    const Eigen::VectorXd& joint_accels,
                                    const SpatialAcceleration& ground = {});

/// Tip-to-base recursion ^{B_j}F = ^{B_j}U_{T_j} ^{T_j}F + ^{B_j}F*, ^{T_{j-1}}F = U ^{B_j}F.
ChainForces propagate_forces(const RobotModel& model, const Eigen::VectorXd& q,
                             const std::vector<SpatialWrench>& net_wrenches,
                             const SpatialWrench& tip = {});

/// ^{B_i}R_I for every link.
std::vector<Mat3> body_rotations_from_inertial(const RobotModel& model, const Eigen::VectorXd& q);

/// W phi_hat + K (V_r - V).
SpatialWrench link_control_wrench(const Regressor& W, const Vec10& phi_hat, const Mat6& K,
                                  const SpatialVelocity& V_r, const SpatialVelocity& V);

/// Required net joint torque motor_hat * qdd_r + k_a (qd_r - qd).
double joint_required_net_torque(double motor_hat, double qdd_r, double k_a, double qd_r, double qd);

/// tau = tau*_r + kappa^T ^{B_i}F_r.
double joint_torque(double tau_star_r, const Vec6& selector, const SpatialWrench& F_r_at_B);

/// Virtual power flow (V_r - V)^T (F_r - F).
double vpf(const SpatialVelocity& V_r, const SpatialVelocity& V, const SpatialWrench& F_r,
           const SpatialWrench& F);

struct ControllerGains {
  Vec6 xi = Vec6::Constant(25.0);
  std::vector<Mat6> K_B;        // one per link
  std::vector<double> k_a;      // one per joint
  double gamma = 10.0;
  double gamma_a = 10.0;
  double clik_damping = 1e-3;
  double joint_position_gain = 25.0;  // joint-space reference mode only

  /// xi = 25 I, K_B = 1.2 I, k_a = 0.1, gamma = gamma_a = 10.
  static ControllerGains defaults(int dof);
  /// Throws std::invalid_argument naming the first non-positive gain.
  void validate(int dof) const;
};

enum class AdapterKind { Nal, Projection, None };
AdapterKind parse_adapter(const std::string& s);
std::string to_string(AdapterKind k);

struct AdapterSettings {
  AdapterKind kind = AdapterKind::Nal;
  NalIntegrator nal_integrator = NalIntegrator::Geometric;
  bool enabled = true;
  double projection_rho = 10.0;
  double projection_bound_fraction = 1.0;  // bounds = true +- fraction * max(|true|, floor)
  double projection_bound_floor = 1e-3;
};

struct CartesianReference {
  TrajectorySample sample;
};

struct JointReference {
  Eigen::VectorXd q;
  Eigen::VectorXd qd;
};

using Reference = std::variant<CartesianReference, JointReference>;

struct ControlOutput {
  Eigen::VectorXd tau;
  Eigen::VectorXd qd_r;
  Eigen::VectorXd qdd_r;
  Eigen::VectorXd tau_star_r;
  ChainMotion V;
  ChainMotion V_r;
  ChainMotion A_r;
  std::vector<Regressor> W;
  std::vector<SpatialWrench> net_r;
  ChainForces F_r;
  // Estimates used for this tick (before the adaptation update).
  std::vector<Vec10> phi_hat;
  Eigen::VectorXd motor_hat;
  // Task-space tracking (Cartesian mode) or joint error (joint mode).
  Pose pose;
  Pose desired;
  Vec6 pose_error = Vec6::Zero();
  Eigen::VectorXd joint_error;
};

class VdcController {
 public:
  /// `model` supplies kinematics only; its inertial parameters are ignored.
  /// `true_links`/`true_motors` seed the projection bounds and may be empty
  /// for the other adapters.
  VdcController(RobotModel model, ControllerGains gains, AdapterSettings adapter,
                const std::vector<InertialParams>& initial_links,
                const Eigen::VectorXd& initial_motors, double dt,
                const std::vector<InertialParams>& true_links = {},
                const Eigen::VectorXd& true_motors = {});

  ControlOutput step(const Eigen::VectorXd& q, const Eigen::VectorXd& qd, const Reference& ref);

  const RobotModel& model() const { return model_; }
  const ControllerGains& gains() const { return gains_; }
  const AdapterSettings& adapter() const { return adapter_; }
  std::vector<Vec10> link_estimates() const;
  std::vector<Mat4> pseudo_estimates() const;
  Eigen::VectorXd motor_estimates() const { return motor_hat_; }
  const std::vector<ProjectionState>& projection_states() const { return projection_; }
  const Eigen::VectorXd& motor_lower() const { return motor_lower_; }
  const Eigen::VectorXd& motor_upper() const { return motor_upper_; }

 private:
  void adapt(const ControlOutput& out, const Eigen::VectorXd& qd);

  RobotModel model_;
  ControllerGains gains_;
  AdapterSettings adapter_;
  double dt_;
  std::vector<NalState> nal_;
  std::vector<ProjectionState> projection_;
  std::vector<Vec10> fixed_;  // AdapterKind::None
  Eigen::VectorXd motor_hat_;
  Eigen::VectorXd motor_lower_, motor_upper_;
  Eigen::VectorXd prev_qd_r_;
  bool first_ = true;
};

struct StabilityDiagnostics {
  Eigen::VectorXd nu_T;  // per link
  Eigen::VectorXd nu_a;  // per joint
  double total = 0.0;
};

/// Accompanying functions evaluated against the true parameters of `truth`:
/// nu_Ti = 1/2 e^T M_Bi e + adaptation term, nu_ai = 1/2 I_mi (qd_r - qd)^2 +
/// adaptation term. The adaptation term is gamma * D(L || L_hat) for NAL,
/// sum(theta_err^2 / (2 rho)) for projection, and zero when adaptation is off.
StabilityDiagnostics accompanying_function(const RobotModel& truth, const VdcController& ctrl,
                                           const ControlOutput& out, const Eigen::VectorXd& qd);

}  // namespace vdc
