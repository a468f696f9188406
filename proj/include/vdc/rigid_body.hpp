#pragma once

#include "vdc/spatial.hpp"

namespace vdc {

using Vec10 = Eigen::Matrix<double, 10, 1>;
using Regressor = Eigen::Matrix<double, 6, 10>;

/// Gravity as it enters G = [m R g; h x R g].
inline const Vec3 kGravity{0.0, 0.0, 9.8};

/// 10-form inertial parameters of a body, expressed in a body-fixed frame A:
/// mass, first moment h = m * r_AB (B at the mass center), and the entries of
/// the inertia about A's origin ordered [xx, yy, zz, xy, yz, xz].
struct InertialParams {
  double m = 0.0;
  Vec3 h = Vec3::Zero();
  Eigen::Matrix<double, 6, 1> vecI = Eigen::Matrix<double, 6, 1>::Zero();

  static InertialParams from_vector(const Vec10& phi);
  /// From mass, mass-center position in A, and inertia about the mass center.
  static InertialParams from_com(double mass, const Vec3& com, const Mat3& inertia_com);

  Vec10 vector() const;
  /// Inertia about A's origin as a symmetric matrix.
  Mat3 inertia_origin() const;
  /// Inertia about the mass center (requires m > 0).
  Mat3 inertia_com() const;
  Vec3 com() const { return h / m; }
};

struct BodyMatrices {
  Mat6 M;
  Mat6 C;
  Vec6 G;
};

/// Mass matrix, Coriolis matrix (restructured form, uses the inertia about the
/// frame origin) and gravity vector. R_AI maps inertial-frame vectors into A.
BodyMatrices assemble_matrices(const InertialParams& p, const Vec3& w, const Mat3& R_AI,
                               const Vec3& g = kGravity);

/// Original-form Coriolis matrix built from the inertia about the mass center.
/// Only used to cross-check the restructured form. Requires p.m > 0.
Mat6 assemble_original_C(const InertialParams& p, const Vec3& w);

/// The (. w) operator: dot_operator(w) * vecI == inertia_origin() * w.
Eigen::Matrix<double, 3, 6> dot_operator(const Vec3& w);

/// W such that W * phi == M * a_r + C(w_r) * V_r + G for every phi.
Regressor regressor(const SpatialAcceleration& a_r, const SpatialVelocity& V_r, const Mat3& R_AI,
                    const Vec3& g = kGravity);

/// Net wrench M a + C V + G.
SpatialWrench net_wrench(const BodyMatrices& mats, const SpatialAcceleration& a,
                         const SpatialVelocity& V);

}  // namespace vdc
