#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vdc/rigid_body.hpp"

namespace vdc {

enum class JointAxis { X, Y, Z };

JointAxis parse_axis(const std::string& s);
std::string to_string(JointAxis a);

/// Revolute joint i followed by link i. The joint rotates frame B_i about one
/// of its own coordinate axes relative to T_{i-1}; the link carries the fixed
/// placement B_i -> T_i and its inertial parameters, expressed in B_i.
struct Link {
  std::string name;
  JointAxis axis = JointAxis::Z;
  FrameTransform tip;  // ^{B_i}U_{T_i}
  InertialParams inertial;
  double motor_inertia = 0.01;  // kg m^2
  double q_min = -3.14159;
  double q_max = 3.14159;

  Vec3 axis_vector() const;
  /// Selector in [v; w] stacking, e.g. z_tau = [0,0,0,0,0,1].
  Vec6 selector() const;
  /// ^{T_{i-1}}U_{B_i} at joint angle q.
  FrameTransform joint_transform(double q) const;
};

/// End-effector pose the model should produce at q = 0, kept in the config
/// as a check on the frame description.
struct ReferencePose {
  Vec3 p = Vec3::Zero();
  UnitQuaternion orientation;
};

struct RobotModel {
  std::string name;
  std::string note;
  FrameTransform base;  // inertial frame -> T_0
  std::vector<Link> links;
  Vec3 gravity = kGravity;
  std::vector<double> home_q;  // empty means all zeros
  std::optional<ReferencePose> reference_pose_q0;

  int dof() const { return static_cast<int>(links.size()); }
  Eigen::VectorXd home() const;
  std::vector<InertialParams> link_params() const;
  Eigen::VectorXd motor_inertias() const;
};

/// Throws std::runtime_error (with the offending key or link named) on schema errors.
RobotModel parse_robot_model(const nlohmann::json& j);
RobotModel load_robot_model(const std::string& path);

/// Problems that make a model unusable for control: inconsistent inertia,
/// non-positive motor inertia, bad limits. Empty when valid.
std::vector<std::string> validate_robot_model(const RobotModel& model);

}  // namespace vdc
