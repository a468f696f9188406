#pragma once

#include "vdc/robot_model.hpp"

// Ground-truth plant. Deliberately written in inertial-frame Newton-Euler form
// with mass-center quantities so it shares nothing with the controller's
// body-frame propagation beyond the basic rotation helpers.
namespace vdc {

/// Link-only joint torques (no motor inertia) for the given motion.
/// `external` is the wrench the environment applies to the tip, in inertial
/// coordinates, taken about the T_n origin.
Eigen::VectorXd inverse_dynamics_ne(const RobotModel& model, const Eigen::VectorXd& q,
                                    const Eigen::VectorXd& qd, const Eigen::VectorXd& qdd,
                                    bool with_gravity, const SpatialWrench& external = {});

/// Joint-space mass matrix including the motor inertias on the diagonal.
Eigen::MatrixXd joint_mass_matrix(const RobotModel& model, const Eigen::VectorXd& q);

/// Solves (M(q) + diag(I_m)) qdd = tau - c(q, qd) - g(q) + J^T external.
/// Throws std::runtime_error if the mass matrix is not positive definite.
Eigen::VectorXd forward_dynamics(const RobotModel& model, const Eigen::VectorXd& q,
                                 const Eigen::VectorXd& qd, const Eigen::VectorXd& tau,
                                 const SpatialWrench& external = {});

/// Kinetic energy of links and motors.
double kinetic_energy(const RobotModel& model, const Eigen::VectorXd& q, const Eigen::VectorXd& qd);

enum class Integrator { RK4, SemiImplicitEuler };

struct JointState {
  Eigen::VectorXd q;
  Eigen::VectorXd qd;
};

/// One fixed step with tau held constant; external(t) is sampled at the
/// integrator's stage times.
template <class ExternalFn>
JointState integrate_step(const RobotModel& model, const JointState& x, const Eigen::VectorXd& tau,
                          double t, double dt, Integrator integrator, ExternalFn&& external) {
  if (integrator == Integrator::SemiImplicitEuler) {
    const Eigen::VectorXd qdd = forward_dynamics(model, x.q, x.qd, tau, external(t));
    JointState out;
    out.qd = x.qd + dt * qdd;
    out.q = x.q + dt * out.qd;
    return out;
  }
  auto f = [&](const JointState& s, double ts) {
    return JointState{s.qd, forward_dynamics(model, s.q, s.qd, tau, external(ts))};
  };
  auto axpy = [](const JointState& s, double h, const JointState& k) {
    return JointState{s.q + h * k.q, s.qd + h * k.qd};
  };
  const JointState k1 = f(x, t);
  const JointState k2 = f(axpy(x, 0.5 * dt, k1), t + 0.5 * dt);
  const JointState k3 = f(axpy(x, 0.5 * dt, k2), t + 0.5 * dt);
  const JointState k4 = f(axpy(x, dt, k3), t + dt);
  return {x.q + dt / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q),
          x.qd + dt / 6.0 * (k1.qd + 2.0 * k2.qd + 2.0 * k3.qd + k4.qd)};
}

}  // namespace vdc
