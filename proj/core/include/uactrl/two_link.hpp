/**
 * @file two_link.hpp
 * @brief Reference model: planar two-link pendulum with revolute joints.
 *
 * Joint 1 is measured from the downward vertical, joint 2 is the relative
 * elbow angle. With the lumped base parameters
 *
 *   a1 = I1 + m1·lc1² + m2·l1² + I2 + m2·lc2²
 *   a2 = I2 + m2·lc2²
 *   a3 = m2·l1·lc2
 *   a4 = (m1·lc1 + m2·l1)·g0
 *   a5 = m2·lc2·g0
 *
 * the dynamics matrices are
 *
 *   M = [ a1 + 2·a3·c2   a2 + a3·c2 ]     g = [ a4·s1 + a5·s12 ]
 *       [ a2 + a3·c2     a2         ]         [ a5·s12         ]
 *
 *   C = a3·s2 · [ -q̇2   -(q̇1+q̇2) ]      Fv = diag(fv1, fv2)
 *               [  q̇1    0        ]
 *
 * Gravity is folded into a4, a5, so a horizontal-plane variant is just
 * g0 = 0. Nonlinear friction is identically zero.
 */

#ifndef UACTRL_TWO_LINK_HPP_
#define UACTRL_TWO_LINK_HPP_

#include "uactrl/model.hpp"

namespace uactrl {

class TwoLinkArm final : public MechanicalModel {
 public:
  /// Minimal identifiable set: (a1..a5, fv1, fv2).
  static constexpr int kMinimalParams = 7;
  /// Adds an inert spare slot at index 5 whose regressor column is
  /// identically zero, so externally supplied eight-element parameter and
  /// gain vectors can be used unchanged: (a1..a5, spare, fv1, fv2).
  static constexpr int kPaddedParams = 8;

  explicit TwoLinkArm(int param_count = kMinimalParams);

  int dof() const override { return 2; }
  int param_count() const override { return p_; }

  DynamicsQuantities dynamics(const Eigen::VectorXd& q,
                              const Eigen::VectorXd& qdot,
                              const BaseParams& pi) const override;

  Eigen::MatrixXd regressor(const Eigen::VectorXd& q,
                            const Eigen::VectorXd& qdot,
                            const Eigen::VectorXd& xi,
                            const Eigen::VectorXd& xidot) const override;

  /// Kinetic plus potential energy, expressible directly in the lumped set.
  std::optional<double> energy(const Eigen::VectorXd& q,
                               const Eigen::VectorXd& qdot,
                               const BaseParams& pi) const override;

  /// Analytic override: for k = 1 the minor is a1 + 2·a3·cos q2 and the
  /// gradient is [0, -2·a3·sin q2].
  Eigen::MatrixXd mass_minor_gradient(const Eigen::VectorXd& q,
                                      const BaseParams& pihat, int i,
                                      int k) const override;

  /// Physical link data from which the lumped parameters derive.
  struct Physical {
    double m1 = 0, m2 = 0;           // link masses (kg)
    double l1 = 0;                   // link-1 length (m)
    double lc1 = 0, lc2 = 0;         // joint-to-COM distances (m)
    double I1 = 0, I2 = 0;           // COM inertias about the joint axis (kg·m²)
    double fv1 = 0, fv2 = 0;         // viscous friction (N·m·s/rad)
    double gravity = 9.80665;        // g0 (m/s²); 0 for a horizontal plane
  };

  /// Lump physical data into a base-parameter vector of the given layout.
  static BaseParams lump(const Physical& ph,
                         int param_count = kMinimalParams);

 private:
  int p_;
  int fv_offset_;  // index of fv1 inside π
};

}  // namespace uactrl

#endif  // UACTRL_TWO_LINK_HPP_
