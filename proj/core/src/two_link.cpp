#include "uactrl/two_link.hpp"

#include <cmath>

namespace uactrl {

TwoLinkArm::TwoLinkArm(int param_count) : p_(param_count) {
  if (param_count != kMinimalParams && param_count != kPaddedParams)
    throw ContractViolation("TwoLinkArm supports p = 7 or p = 8");
  fv_offset_ = p_ - 2;
}

DynamicsQuantities TwoLinkArm::dynamics(const Eigen::VectorXd& q,
                                        const Eigen::VectorXd& qdot,
                                        const BaseParams& pi) const {
  const double a1 = pi(0), a2 = pi(1), a3 = pi(2), a4 = pi(3), a5 = pi(4);
  const double fv1 = pi(fv_offset_), fv2 = pi(fv_offset_ + 1);
  const double c2 = std::cos(q(1));
  const double s2 = std::sin(q(1));
  const double s1 = std::sin(q(0));
  const double s12 = std::sin(q(0) + q(1));

  DynamicsQuantities out;
  out.M.resize(2, 2);
  out.M << a1 + 2.0 * a3 * c2, a2 + a3 * c2,  //
      a2 + a3 * c2, a2;

  const double h = a3 * s2;
  out.C.resize(2, 2);
  out.C << -h * qdot(1), -h * (qdot(0) + qdot(1)),  //
      h * qdot(0), 0.0;

  out.g.resize(2);
  out.g << a4 * s1 + a5 * s12, a5 * s12;

  out.Fv = Eigen::Vector2d(fv1, fv2).asDiagonal();
  return out;
}

Eigen::MatrixXd TwoLinkArm::regressor(const Eigen::VectorXd& q,
                                      const Eigen::VectorXd& qdot,
                                      const Eigen::VectorXd& xi,
                                      const Eigen::VectorXd& xidot) const {
  const double c2 = std::cos(q(1));
  const double s2 = std::sin(q(1));
  const double s1 = std::sin(q(0));
  const double s12 = std::sin(q(0) + q(1));

  Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(2, p_);
  // a1, a2: pure xidot columns.
  Y(0, 0) = xidot(0);
  Y(0, 1) = xidot(1);
  Y(1, 1) = xidot(0) + xidot(1);
  // a3: cosine coupling in M, sine coupling in C (C evaluated at q̇, applied
  // to ξ).
  Y(0, 2) = 2.0 * c2 * xidot(0) + c2 * xidot(1) - s2 * qdot(1) * xi(0) -
            s2 * (qdot(0) + qdot(1)) * xi(1);
  Y(1, 2) = c2 * xidot(0) + s2 * qdot(0) * xi(0);
  // a4, a5: gravity.
  Y(0, 3) = s1;
  Y(0, 4) = s12;
  Y(1, 4) = s12;
  // fv1, fv2: viscous friction applied to ξ.
  Y(0, fv_offset_) = xi(0);
  Y(1, fv_offset_ + 1) = xi(1);
  return Y;
}

std::optional<double> TwoLinkArm::energy(const Eigen::VectorXd& q,
                                         const Eigen::VectorXd& qdot,
                                         const BaseParams& pi) const {
  const Eigen::MatrixXd M = dynamics(q, qdot, pi).M;
  const double kinetic = 0.5 * qdot.dot(M * qdot);
  // Zero of potential at the hanging configuration, shifted so E(0,0) = 0.
  const double potential = pi(3) * (1.0 - std::cos(q(0))) +
                           pi(4) * (1.0 - std::cos(q(0) + q(1)));
  return kinetic + potential;
}

Eigen::MatrixXd TwoLinkArm::mass_minor_gradient(const Eigen::VectorXd& q,
                                                const BaseParams& pihat, int i,
                                                int k) const {
  if (k == 1 && i == 0) {
    Eigen::MatrixXd grad(1, 2);
    grad << 0.0, -2.0 * pihat(2) * std::sin(q(1));
    return grad;
  }
  // k = 2 minors are the full M; fall back to the generic route.
  return MechanicalModel::mass_minor_gradient(q, pihat, i, k);
}

BaseParams TwoLinkArm::lump(const Physical& ph, int param_count) {
  const double a2 = ph.I2 + ph.m2 * ph.lc2 * ph.lc2;
  const double a1 = ph.I1 + ph.m1 * ph.lc1 * ph.lc1 + ph.m2 * ph.l1 * ph.l1 + a2;
  const double a3 = ph.m2 * ph.l1 * ph.lc2;
  const double a4 = (ph.m1 * ph.lc1 + ph.m2 * ph.l1) * ph.gravity;
  const double a5 = ph.m2 * ph.lc2 * ph.gravity;

  BaseParams pi = BaseParams::Zero(param_count);
  if (param_count != kMinimalParams && param_count != kPaddedParams)
    throw ContractViolation("TwoLinkArm::lump supports p = 7 or p = 8");
  pi(0) = a1;
  pi(1) = a2;
  pi(2) = a3;
  pi(3) = a4;
  pi(4) = a5;
  pi(param_count - 2) = ph.fv1;
  pi(param_count - 1) = ph.fv2;
  return pi;
}

}  // namespace uactrl
