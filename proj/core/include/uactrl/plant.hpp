/**
 * @file plant.hpp
 * @brief Forward dynamics of a possibly underactuated plant: the applied
 *        generalized force is (0_k, τ̄) with τ̄ acting on the collocated
 *        coordinates only.
 */

#ifndef UACTRL_PLANT_HPP_
#define UACTRL_PLANT_HPP_

#include "uactrl/model.hpp"

namespace uactrl {

/// Partition of the generalized-force vector: k leading zeros, m actuated.
struct ActuationMap {
  int k = 0;
  int m = 0;

  int dof() const { return k + m; }

  /// Embed τ̄ ∈ R^m as (0_k, τ̄) ∈ R^n.
  Eigen::VectorXd full_torque(const Eigen::VectorXd& tau_bar) const {
    if (tau_bar.size() != m)
      throw ContractViolation("full_torque: tau_bar must have length m");
    Eigen::VectorXd tau = Eigen::VectorXd::Zero(dof());
    tau.tail(m) = tau_bar;
    return tau;
  }
};

/// q̈ = M(q,π)⁻¹ [(0_k, τ̄) − C q̇ − g − Fv q̇ − F].
/// Throws SingularPlantError when M is singular or has condition number
/// above 1e12 at q.
Eigen::VectorXd forward_dynamics(const MechanicalModel& model,
                                 const JointState& state, const BaseParams& pi,
                                 const Eigen::VectorXd& tau_bar);

}  // namespace uactrl

#endif  // UACTRL_PLANT_HPP_
