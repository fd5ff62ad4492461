#include "uactrl/plant.hpp"

namespace uactrl {

Eigen::VectorXd forward_dynamics(const MechanicalModel& model,
                                 const JointState& state, const BaseParams& pi,
                                 const Eigen::VectorXd& tau_bar) {
  const int m = state.collocated();
  if (tau_bar.size() != m)
    throw ContractViolation("forward_dynamics: tau_bar must have length m");

  const DynamicsQuantities dq = eval_dynamics(model, state, pi);
  const Eigen::VectorXd F = model.nonlinear_friction(state.q, state.qdot, pi);

  Eigen::VectorXd rhs = -dq.C * state.qdot - dq.g - dq.Fv * state.qdot - F;
  rhs.tail(m) += tau_bar;

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(dq.M, Eigen::ComputeThinU |
                                                  Eigen::ComputeThinV);
  const double smax = svd.singularValues().maxCoeff();
  const double smin = svd.singularValues().minCoeff();
  if (smin <= 0.0 || smax > 1e12 * smin)
    throw SingularPlantError("plant mass matrix singular or ill-conditioned",
                             state.q);
  return svd.solve(rhs);
}

}  // namespace uactrl
