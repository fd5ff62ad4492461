/**
 * @file model.hpp
 * @brief Mechanical-model abstraction: mass/Coriolis/gravity/friction plus
 *        the velocity-shifted regressor of the linear-in-parameters form.
 *
 * Models describe dynamics of the form
 *
 *   M(q,π) q̈ + C(q,q̇,π) q̇ + g(q,π) + Fv(π) q̇ + F(q,q̇,π) = τ
 *
 * with π the constant base-parameter vector, and expose a regressor Y with
 *
 *   Y(q,q̇,ξ,ξ̇) π = M(q,π) ξ̇ + C(q,q̇,π) ξ + g(q,π) + Fv(π) ξ + F(q,q̇,π)
 *
 * for every ξ, ξ̇ and every π. The Coriolis matrix is evaluated at the
 * measured velocity q̇ while it multiplies ξ; the mass matrix multiplies the
 * fourth argument.
 */

#ifndef UACTRL_MODEL_HPP_
#define UACTRL_MODEL_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

#include "uactrl/errors.hpp"

namespace uactrl {

/// Constant base parameters π (and estimates π̂) in which dynamics is linear.
using BaseParams = Eigen::VectorXd;

/// Generalized coordinates with their collocated/noncollocated partition.
/// Ordering convention: the first `noncollocated` entries of q are the
/// unactuated coordinates, the remaining ones are actuated.
struct JointState {
  Eigen::VectorXd q;
  Eigen::VectorXd qdot;
  int noncollocated = 0;  // k

  int dof() const { return static_cast<int>(q.size()); }
  int collocated() const { return dof() - noncollocated; }  // m

  Eigen::VectorXd qn() const { return q.head(noncollocated); }
  Eigen::VectorXd qc() const { return q.tail(collocated()); }
  Eigen::VectorXd qdotn() const { return qdot.head(noncollocated); }
  Eigen::VectorXd qdotc() const { return qdot.tail(collocated()); }

  void validate() const;
};

/// M, C, g, Fv evaluated at one (q, q̇, π).
struct DynamicsQuantities {
  Eigen::MatrixXd M;
  Eigen::MatrixXd C;
  Eigen::VectorXd g;
  Eigen::MatrixXd Fv;
};

/// Empirical workspace bounds: λ1 I ≤ M ≤ λ2 I, |C| ≤ λ0 |q̇|, |g| ≤ γ0.
struct PropertyBounds {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda0 = 0.0;
  double gamma0 = 0.0;
};

class MechanicalModel {
 public:
  virtual ~MechanicalModel() = default;

  virtual int dof() const = 0;          // n
  virtual int param_count() const = 0;  // p

  /// Closed-form M, C, g, Fv at (q, q̇, π). Implementations need not
  /// symmetrize M; eval_dynamics() does that.
  virtual DynamicsQuantities dynamics(const Eigen::VectorXd& q,
                                      const Eigen::VectorXd& qdot,
                                      const BaseParams& pi) const = 0;

  /// Regressor Y(q, q̇, ξ, ξ̇), n×p.
  virtual Eigen::MatrixXd regressor(const Eigen::VectorXd& q,
                                    const Eigen::VectorXd& qdot,
                                    const Eigen::VectorXd& xi,
                                    const Eigen::VectorXd& xidot) const = 0;

  /// Nonlinear friction hook F(q, q̇, π); zero by default.
  virtual Eigen::VectorXd nonlinear_friction(const Eigen::VectorXd& q,
                                             const Eigen::VectorXd& qdot,
                                             const BaseParams& pi) const;

  /// Total mechanical energy when the model can provide it (used by the
  /// conservation checks); std::nullopt otherwise.
  virtual std::optional<double> energy(const Eigen::VectorXd& q,
                                       const Eigen::VectorXd& qdot,
                                       const BaseParams& pi) const;

  /// ∂/∂q of the i-th column identity Y_Mn(q, e_i)·π̂ of the k×k estimated
  /// mass minor, as a k×n matrix. Default: central finite differences with
  /// step 1e-6 rad per coordinate. Models may override with an analytic form.
  virtual Eigen::MatrixXd mass_minor_gradient(const Eigen::VectorXd& q,
                                              const BaseParams& pihat, int i,
                                              int k) const;
};

/// M, C, g, Fv at the given state; M is symmetrized exactly.
DynamicsQuantities eval_dynamics(const MechanicalModel& model,
                                 const JointState& state,
                                 const BaseParams& pi);

/// Y(q, q̇, ξ, ξ̇) with dimension checks.
Eigen::MatrixXd eval_regressor(const MechanicalModel& model,
                               const Eigen::VectorXd& q,
                               const Eigen::VectorXd& qdot,
                               const Eigen::VectorXd& xi,
                               const Eigen::VectorXd& xidot);

/// First k rows of Y (noncollocated block).
Eigen::MatrixXd regressor_rows_noncollocated(const Eigen::MatrixXd& Y, int k);

/// Last n−k rows of Y (collocated block).
Eigen::MatrixXd regressor_rows_collocated(const Eigen::MatrixXd& Y, int k);

/// k-th order leading principal minor of M(q, π̂): S·M(q,π̂)·Sᵀ with
/// S = (I_k 0). Singularity is the caller's concern.
Eigen::MatrixXd mass_minor_estimate(const MechanicalModel& model,
                                    const Eigen::VectorXd& q,
                                    const BaseParams& pihat, int k);

/// Empirical λ1, λ2, λ0, γ0 over `sample_count` configurations sampled
/// uniformly from [-π, π]^n (unit-sphere velocities for λ0), deterministic
/// given the seed. Throws NonPositiveDefiniteError on a non-PD sample.
PropertyBounds estimate_property_bounds(const MechanicalModel& model,
                                        const BaseParams& pi, int sample_count,
                                        std::uint64_t seed);

}  // namespace uactrl

#endif  // UACTRL_MODEL_HPP_
