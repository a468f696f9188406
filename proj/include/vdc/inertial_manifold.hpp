#pragma once

#include "vdc/rigid_body.hpp"

// Pseudo-inertia matrices and the geometry of the positive-definite cone P(4).
namespace vdc {

/// Symmetric 4x4 pseudo-inertia [[Sigma, h], [h^T, m]].
struct PseudoInertia {
  Mat4 L = Mat4::Zero();
};

PseudoInertia params_to_pseudo(const InertialParams& phi);
InertialParams pseudo_to_params(const PseudoInertia& P);

/// Eigenvalues of a symmetric matrix, ascending.
Eigen::Vector4d sym_eigenvalues(const Mat4& A);
double min_eigenvalue(const Mat4& A);

/// min-eig(L) > 1e-12 * (1 + |tr L|).
bool is_positive_definite(const Mat4& L);
/// Physical consistency: params_to_pseudo(phi) is positive definite.
bool is_consistent(const InertialParams& phi);

/// Log-det divergence log(|L2|/|L1|) + tr(L2^-1 L1) - 4. Throws std::domain_error
/// unless both arguments are positive definite.
double bregman_divergence(const PseudoInertia& L1, const PseudoInertia& L2);
/// The same divergence via sum(-log(l) + l - 1) over eigenvalues of L2^-1 L1.
double bregman_divergence_eig(const PseudoInertia& L1, const PseudoInertia& L2);

/// Affine-invariant distance (sum log^2 of eigenvalues of L1^-1/2 L2 L1^-1/2)^1/2.
double geodesic_distance(const PseudoInertia& L1, const PseudoInertia& L2);

/// 0.5 tr(P^-1 F1 P^-1 F2).
double riemannian_metric(const PseudoInertia& P, const Mat4& F1, const Mat4& F2);

/// Square root and inverse square root of a positive-definite matrix.
Mat4 spd_sqrt(const Mat4& A);
Mat4 spd_inv_sqrt(const Mat4& A);
/// Matrix exponential of a symmetric matrix.
Mat4 sym_exp(const Mat4& A);

}  // namespace vdc
