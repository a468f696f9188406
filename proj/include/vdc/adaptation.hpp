#pragma once

#include "vdc/inertial_manifold.hpp"

namespace vdc {

/// Unique symmetric S with tr(params_to_pseudo(phi) * S) == phi . s for all phi.
Mat4 solve_dual(const Vec10& s);

/// Adaptation signal W^T (V_r - V).
Vec10 adaptation_signal(const Regressor& W, const SpatialVelocity& V_r, const SpatialVelocity& V);

enum class NalIntegrator {
  Geometric,  // L^1/2 exp(dt/gamma L^1/2 S L^1/2) L^1/2, stays positive definite
  Euler,      // L + dt/gamma L S L
};

struct NalState {
  PseudoInertia L;
  double gamma = 10.0;

  InertialParams params() const { return pseudo_to_params(L); }
};

/// One step of dL/dt = (1/gamma) L S L with S = solve_dual(s).
/// Throws std::domain_error if the state is not positive definite, or
/// std::invalid_argument for dt <= 0 or gamma <= 0.
NalState nal_step(const NalState& state, const Vec10& s, double dt,
                  NalIntegrator integrator = NalIntegrator::Geometric);

/// Scalar pseudo-inertia variant for a joint motor: L+ = L exp(dt s L / gamma).
double nal_step_scalar(double L, double s, double gamma, double dt);

struct ProjectionState {
  Vec10 theta = Vec10::Zero();
  Vec10 rho = Vec10::Constant(10.0);
  Vec10 lower = Vec10::Zero();
  Vec10 upper = Vec10::Zero();
};

/// Per-parameter gradient update with the boundary switch, clamped into the
/// bounds. Throws std::invalid_argument if any lower >= upper.
ProjectionState projection_step(const ProjectionState& state, const Vec10& s, double dt);

/// Scalar version used for joint motors.
double projection_step_scalar(double theta, double s, double rho, double lower, double upper,
                              double dt);

}  // namespace vdc
