/**
 * @file monitors.hpp
 * @brief Runtime certificates: the closed-loop storage function, its analytic
 *        rate, and the determinant-floor report. Simulation-only instruments —
 *        they receive the true parameters, which no controller sees.
 *
 * The storage function is
 *
 *   V = ½ [ sᵀ M(q,π) s + π̃ᵀ Γ⁻¹ π̃ + 2 eᵀ K Λ1 e + 2 yᵀ Λ1 K Λ2 y ]
 *
 * with π̃ = π̂ − π. The integral state used here is reconstructed from the
 * controller state as y = Λ2⁻¹ (ṙ − Λ1 e − ξ c); it satisfies ẏ = e and makes
 * ξ c = ṙ − Λ1 e − Λ2 y hold exactly for any initialization of ξ, which is
 * what the decrease argument needs. Along closed-loop trajectories with the
 * plain adaptation the rate is
 *
 *   V̇ = −s nᵀ K n s n − (ė + Λ2 y)ᵀ K (ė + Λ2 y) − sᵀ Fv s − eᵀ Λ1 K Λ1 e ≤ 0.
 */

#ifndef UACTRL_MONITORS_HPP_
#define UACTRL_MONITORS_HPP_

#include "uactrl/controller.hpp"
#include "uactrl/trace.hpp"

namespace uactrl {

/// V at one state; nonnegative up to the constant π̃ offset of inert
/// parameter slots.
double lyapunov_value(const MechanicalModel& model, const JointState& state,
                      const ControllerState& ctrl, const Gains& gains,
                      const ReferenceSample& ref, const BaseParams& pi_true);

/// Closed-form V̇; a negative semidefinite quadratic form of the current
/// state, exact along closed-loop trajectories while η = 0.
double lyapunov_rate(const MechanicalModel& model, const JointState& state,
                     const ControllerState& ctrl, const Gains& gains,
                     const ReferenceSample& ref, const BaseParams& pi_true);

/// True iff the 2m×2m block matrix (K K; K K) has min eigenvalue ≥ −1e-12.
bool kbar_psd_check(const Eigen::VectorXd& K_diag);

struct DeterminantFloorReport {
  double min_det = 0.0;
  double t_at_min = 0.0;
  double threshold = 0.0;  // ε
  double tolerance = 0.0;  // 0.02·ε absorbs one-step integration error
  bool ok = false;
};

/// Min over the trace of det(M̂ n) against the floor ε − 0.02 ε.
DeterminantFloorReport determinant_floor_monitor(const Trace& trace,
                                                 double epsilon);

}  // namespace uactrl

#endif  // UACTRL_MONITORS_HPP_
