#pragma once

#include <vector>

#include "vdc/robot_model.hpp"

namespace vdc {

struct Pose {
  Vec3 p = Vec3::Zero();
  UnitQuaternion orientation;

  Mat3 rotation() const { return orientation.to_rotation(); }
};

/// Inertial-frame placement of every B_i and T_i (T_0 is the base frame).
struct ChainFrames {
  std::vector<FrameTransform> B;  // size n
  std::vector<FrameTransform> T;  // size n + 1
};

ChainFrames chain_frames(const RobotModel& model, const Eigen::VectorXd& q);

/// Pose of T_n in the inertial frame.
Pose forward_kinematics(const RobotModel& model, const Eigen::VectorXd& q);

/// Geometric Jacobian of T_n: [p_dot; w] = J q_dot, both in the inertial frame.
Eigen::MatrixXd jacobian(const RobotModel& model, const Eigen::VectorXd& q);

/// eta(q) eps_d - eta_d eps(q) - skew(eps_d) eps(q), both inputs canonicalized
/// (eta >= 0) first.
Vec3 orientation_error(const UnitQuaternion& current, const UnitQuaternion& desired);

/// [p_d - p; orientation_error].
Vec6 pose_error(const Pose& current, const Pose& desired);

/// Rotation angle (rad) separating two orientations.
double rotation_angle_between(const UnitQuaternion& a, const UnitQuaternion& b);

/// J^T (J J^T + damping^2 I)^-1 (x_dot_d + xi .* e). With damping = 0 this is
/// the minimum-norm solution (J must have full row rank).
Eigen::VectorXd clik_required_velocity(const Eigen::MatrixXd& J, const Vec6& error,
                                       const Vec6& desired_twist, const Vec6& xi_diag,
                                       double damping);

/// Desired Cartesian state: position plus XYZ Euler angles, and their first two
/// derivatives.
struct TrajectorySample {
  double t = 0.0;
  Vec6 x = Vec6::Zero();
  Vec6 xd = Vec6::Zero();
  Vec6 xdd = Vec6::Zero();

  Pose pose() const;
  /// [p_dot; w] with w mapped from the Euler-angle rates.
  Vec6 twist() const;
};

/// Componentwise quintic x0 -> xf over [0, T] with zero boundary velocity and
/// acceleration. Throws std::invalid_argument for T <= 0 or t outside [0, T].
TrajectorySample quintic_trajectory(const Vec6& x0, const Vec6& xf, double T, double t);

/// Piecewise quintic through a list of targets; holds before the first
/// segment and after the last.
class WaypointTrajectory {
 public:
  struct Segment {
    Vec6 target;
    double duration_s;
    double hold_s;
  };

  WaypointTrajectory(const Vec6& start, std::vector<Segment> segments);
  TrajectorySample sample(double t) const;
  double total_duration() const;

 private:
  Vec6 start_;
  std::vector<Segment> segments_;
};

/// XYZ Euler angles of a rotation (inverse of rotation_from_euler_xyz away from
/// beta = +-pi/2).
Vec3 euler_xyz_from_rotation(const Mat3& R);

/// [p; euler_xyz] of a pose.
Vec6 pose_to_vector(const Pose& pose);

}  // namespace vdc
