/**
 * @file controller.hpp
 * @brief Adaptive tracking laws producing torque commands and controller-state
 *        derivatives from (t, q, q̇) only. No acceleration measurement is used
 *        anywhere: q̈ never appears in a signature.
 *
 * Fully actuated law (k = 0):
 *   τ  = Y(q,q̇,ξ,ξ̇) π̂ − K s,     s = q̇ − ξ
 *   π̂̇ = −Γ Yᵀ(q,q̇,ξ,ξ̇) s
 *   ξ̇  = r̈ − Λ1 ė − Λ2 e,         e = q − r
 *
 * Collocated law (k ≥ 1): same structure on the collocated block, with the
 * noncollocated block of ξ̇ chosen as the fictitious control input
 *   ξ̇ n = M̂ n⁻¹ [ K n s n − Y n(q,q̇,ξ,(0_k, ξ̇ c)) π̂ ]
 * which keeps the closed loop linear in parameters; its defining property
 *   Y n(q,q̇,ξ,ξ̇) π̂ = K n s n
 * is asserted after every evaluation.
 *
 * Desingularized adaptation: π̂̇ = −Γ [Yᵀ s − η δ] with η, δ chosen so that
 * det(M̂ n) never decreases while at or below the floor ε.
 */

#ifndef UACTRL_CONTROLLER_HPP_
#define UACTRL_CONTROLLER_HPP_

#include "uactrl/model.hpp"
#include "uactrl/reference.hpp"

namespace uactrl {

/// Quantities whose dynamics are the auxiliary control inputs: the velocity
/// reference ξ, the estimate π̂, and the integral state y with ẏ = e.
struct ControllerState {
  Eigen::VectorXd xi;
  BaseParams pihat;
  Eigen::VectorXd y;
};

/// Diagonal gains stored as their diagonals; Γ is a full SPD matrix.
struct Gains {
  Eigen::VectorXd K;        // m
  Eigen::VectorXd Kn;       // k
  Eigen::VectorXd Lambda1;  // m
  Eigen::VectorXd Lambda2;  // m
  Eigen::MatrixXd Gamma;    // p×p
  double epsilon = 0.0;     // determinant floor of the desingularized law

  void validate(int k, int m, int p, bool need_epsilon) const;
};

struct ControlOutput {
  Eigen::VectorXd tau_bar;   // m
  Eigen::VectorXd xidot;     // n
  Eigen::VectorXd pihatdot;  // p
  Eigen::VectorXd delta;     // p; zero when not computable
  Eigen::VectorXd s;         // n
  Eigen::VectorXd e;         // m
  double eta = 0.0;
};

enum class AdaptationLaw { Plain, Desingularized };

/// Fault hooks for the verification suite's mutation checks. Inactive by
/// default; never set these outside deliberate-bug harnesses.
struct FaultInjection {
  double eta_sign = 1.0;                    // −1 flips the desingularizing push
  bool drop_position_term = false;          // drop Λ2·e from ξ̇ c
  bool drop_noncollocated_damping = false;  // drop K n·s n from ξ̇ n
};

/// Raised when the defining identity of ξ̇ n fails after an evaluation.
class ControllerIdentityError : public std::runtime_error {
 public:
  ControllerIdentityError(const std::string& what, double t, double residual)
      : std::runtime_error(what), t_(t), residual_(residual) {}
  double time() const { return t_; }
  double residual() const { return residual_; }

 private:
  double t_;
  double residual_;
};

/// Fully actuated tracking law; requires state.noncollocated == 0.
ControlOutput fully_actuated_control(const MechanicalModel& model, double t,
                                     const JointState& state,
                                     const ControllerState& ctrl,
                                     const Gains& gains,
                                     const ReferenceSignal& ref);

/// Collocated tracking law; requires state.noncollocated >= 1. Throws
/// SingularMinorError when M̂ n is singular or ill-conditioned.
ControlOutput collocated_control(const MechanicalModel& model, double t,
                                 const JointState& state,
                                 const ControllerState& ctrl,
                                 const Gains& gains, const ReferenceSignal& ref,
                                 AdaptationLaw law = AdaptationLaw::Plain,
                                 const FaultInjection* fault = nullptr);

struct AdaptationTerms {
  Eigen::VectorXd pihatdot;  // p
  double eta = 0.0;
  Eigen::VectorXd delta;     // p
};

/// Desingularized adaptation terms at one state. Requires det(M̂ n) > 0.
AdaptationTerms desingularized_adaptation(
    const MechanicalModel& model, const Eigen::VectorXd& q,
    const Eigen::VectorXd& qdot, const Eigen::VectorXd& xi,
    const Eigen::VectorXd& xidot, const Eigen::VectorXd& s,
    const BaseParams& pihat, const Gains& gains, int k);

/// Y_Mn(q, e_i) = S [Y(q,0,0,(e_i,0_m)) − Y(q,0,0,0)], k×p. Its product with
/// any π equals the i-th column of the k×k leading minor of M(q,π).
Eigen::MatrixXd regressor_mass_column(const MechanicalModel& model,
                                      const Eigen::VectorXd& q, int i, int k);

/// ∂/∂q [Y_Mn(q,e_i)·π̂] as a k×n matrix (analytic when the model provides
/// it, central finite differences otherwise).
Eigen::MatrixXd grad_q_mass_column(const MechanicalModel& model,
                                   const Eigen::VectorXd& q,
                                   const BaseParams& pihat, int i, int k);

namespace detail {

/// Shared implementation behind both public laws; k comes from the state
/// partition and may be zero. Exposed so the k = 0 reduction can be checked
/// bit-for-bit against fully_actuated_control.
ControlOutput tracking_control(const MechanicalModel& model, double t,
                               const JointState& state,
                               const ControllerState& ctrl, const Gains& gains,
                               const ReferenceSignal& ref, AdaptationLaw law,
                               const FaultInjection* fault);

}  // namespace detail

}  // namespace uactrl

#endif  // UACTRL_CONTROLLER_HPP_
