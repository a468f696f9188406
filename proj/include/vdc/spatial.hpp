#pragma once

#include <Eigen/Dense>

// 6D velocity/wrench algebra in the [linear; angular] stacking used throughout
// the controller. Frames are described by (rotation, offset) pairs; the 6x6
// block matrix is only built when asked for.
namespace vdc {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat4 = Eigen::Matrix4d;

/// Cross-product matrix: skew(a) * b == a.cross(b).
inline Mat3 skew(const Vec3& a) {
  Mat3 s;
  s << 0.0, -a.z(), a.y(),
       a.z(), 0.0, -a.x(),
       -a.y(), a.x(), 0.0;
  return s;
}

struct SpatialVelocity {
  Vec3 v = Vec3::Zero();  // m/s
  Vec3 w = Vec3::Zero();  // rad/s

  static SpatialVelocity from(const Vec6& x) { return {x.head<3>(), x.tail<3>()}; }
  Vec6 vec() const {
    Vec6 x;
    x << v, w;
    return x;
  }
};

struct SpatialWrench {
  Vec3 f = Vec3::Zero();  // N
  Vec3 m = Vec3::Zero();  // N m

  static SpatialWrench from(const Vec6& x) { return {x.head<3>(), x.tail<3>()}; }
  Vec6 vec() const {
    Vec6 x;
    x << f, m;
    return x;
  }
};

/// Time derivative of a SpatialVelocity's body coordinates.
using SpatialAcceleration = SpatialVelocity;

/// ^A U_B: rotation ^A R_B and the offset ^A r_AB of B's origin, in A.
class FrameTransform {
 public:
  FrameTransform() = default;
  /// Throws std::invalid_argument if R is not a proper rotation to 1e-12.
  FrameTransform(const Mat3& R, const Vec3& r);

  static FrameTransform identity() { return {}; }
  /// Skips the orthonormality check; for rotations built analytically.
  static FrameTransform trusted(const Mat3& R, const Vec3& r) {
    FrameTransform t;
    t.R_ = R;
    t.r_ = r;
    return t;
  }

  const Mat3& rotation() const { return R_; }
  const Vec3& offset() const { return r_; }

  /// ^B U_A.
  FrameTransform inverse() const { return trusted(R_.transpose(), -R_.transpose() * r_); }
  /// ^A U_C = ^A U_B * ^B U_C.
  FrameTransform operator*(const FrameTransform& bc) const {
    return trusted(R_ * bc.R_, r_ + R_ * bc.r_);
  }

  Mat6 matrix() const;

 private:
  Mat3 R_ = Mat3::Identity();
  Vec3 r_ = Vec3::Zero();
};

/// ^B V = ^A U_B^T ^A V.
SpatialVelocity transform_velocity(const FrameTransform& U, const SpatialVelocity& va);
/// ^A F = ^A U_B ^B F.
SpatialWrench transform_wrench(const FrameTransform& U, const SpatialWrench& fb);

struct UnitQuaternion {
  double eta = 1.0;
  Vec3 eps = Vec3::Zero();

  double norm() const { return std::sqrt(eta * eta + eps.squaredNorm()); }
  Mat3 to_rotation() const;
  /// Same rotation, eta >= 0; ties broken by first nonzero eps component > 0.
  UnitQuaternion canonical() const;
};

/// Throws std::invalid_argument if R is not orthonormal to 1e-9.
UnitQuaternion quat_from_rotation(const Mat3& R);

Mat3 rot_x(double a);
Mat3 rot_y(double a);
Mat3 rot_z(double a);
/// Rotation about a unit axis.
Mat3 rot_axis(const Vec3& axis, double a);
/// XYZ (intrinsic) Euler angles: Rx(alpha) Ry(beta) Rz(delta).
Mat3 rotation_from_euler_xyz(const Vec3& abd);
/// Angular velocity of rotation_from_euler_xyz for given angle rates.
Vec3 angular_velocity_from_euler_xyz_rates(const Vec3& abd, const Vec3& rates);

bool is_rotation(const Mat3& R, double tol);

}  // namespace vdc
