#include "uactrl/model.hpp"

#include <random>
#include <sstream>

namespace uactrl {

namespace {

std::string dim_msg(const char* what, long got, long want) {
  std::ostringstream os;
  os << what << ": got " << got << ", expected " << want;
  return os.str();
}

}  // namespace

void JointState::validate() const {
  if (q.size() != qdot.size())
    throw ContractViolation(dim_msg("qdot length", qdot.size(), q.size()));
  if (noncollocated < 0 || noncollocated >= dof() || dof() < 1)
    throw ContractViolation("partition requires 0 <= k < n and m >= 1");
  if (!q.allFinite() || !qdot.allFinite())
    throw ContractViolation("joint state contains non-finite entries");
}

Eigen::VectorXd MechanicalModel::nonlinear_friction(const Eigen::VectorXd&,
                                                    const Eigen::VectorXd&,
                                                    const BaseParams&) const {
  return Eigen::VectorXd::Zero(dof());
}

std::optional<double> MechanicalModel::energy(const Eigen::VectorXd&,
                                              const Eigen::VectorXd&,
                                              const BaseParams&) const {
  return std::nullopt;
}

Eigen::MatrixXd MechanicalModel::mass_minor_gradient(const Eigen::VectorXd& q,
                                                     const BaseParams& pihat,
                                                     int i, int k) const {
  const int n = dof();
  const double hq = 1e-6;  // rad, central differences
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd unit = Eigen::VectorXd::Zero(n);
  unit(i) = 1.0;

  auto minor_column = [&](const Eigen::VectorXd& at) -> Eigen::VectorXd {
    const Eigen::MatrixXd Ymn =
        (regressor(at, zero, zero, unit) - regressor(at, zero, zero, zero))
            .topRows(k);
    return Ymn * pihat;
  };

  Eigen::MatrixXd grad(k, n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd qp = q, qm = q;
    qp(j) += hq;
    qm(j) -= hq;
    grad.col(j) = (minor_column(qp) - minor_column(qm)) / (2.0 * hq);
  }
  return grad;
}

DynamicsQuantities eval_dynamics(const MechanicalModel& model,
                                 const JointState& state,
                                 const BaseParams& pi) {
  state.validate();
  if (state.dof() != model.dof())
    throw ContractViolation(dim_msg("state dof", state.dof(), model.dof()));
  if (pi.size() != model.param_count())
    throw ContractViolation(
        dim_msg("parameter length", pi.size(), model.param_count()));

  DynamicsQuantities out = model.dynamics(state.q, state.qdot, pi);
  out.M = (0.5 * (out.M + out.M.transpose())).eval();
  return out;
}

Eigen::MatrixXd eval_regressor(const MechanicalModel& model,
                               const Eigen::VectorXd& q,
                               const Eigen::VectorXd& qdot,
                               const Eigen::VectorXd& xi,
                               const Eigen::VectorXd& xidot) {
  const int n = model.dof();
  if (q.size() != n || qdot.size() != n || xi.size() != n || xidot.size() != n)
    throw ContractViolation("eval_regressor: all vectors must have length n");
  return model.regressor(q, qdot, xi, xidot);
}

Eigen::MatrixXd regressor_rows_noncollocated(const Eigen::MatrixXd& Y, int k) {
  if (k < 0 || k > Y.rows())
    throw ContractViolation(dim_msg("noncollocated rows", k, Y.rows()));
  return Y.topRows(k);
}

Eigen::MatrixXd regressor_rows_collocated(const Eigen::MatrixXd& Y, int k) {
  if (k < 0 || k > Y.rows())
    throw ContractViolation(dim_msg("noncollocated rows", k, Y.rows()));
  return Y.bottomRows(Y.rows() - k);
}

Eigen::MatrixXd mass_minor_estimate(const MechanicalModel& model,
                                    const Eigen::VectorXd& q,
                                    const BaseParams& pihat, int k) {
  if (k < 1 || k > model.dof())
    throw ContractViolation("mass_minor_estimate requires 1 <= k <= n");
  if (q.size() != model.dof() || pihat.size() != model.param_count())
    throw ContractViolation("mass_minor_estimate: dimension mismatch");

  const Eigen::VectorXd qdot = Eigen::VectorXd::Zero(model.dof());
  Eigen::MatrixXd M = model.dynamics(q, qdot, pihat).M;
  M = (0.5 * (M + M.transpose())).eval();
  return M.topLeftCorner(k, k);
}

PropertyBounds estimate_property_bounds(const MechanicalModel& model,
                                        const BaseParams& pi, int sample_count,
                                        std::uint64_t seed) {
  if (sample_count < 1) throw ContractViolation("sample_count must be >= 1");
  if (pi.size() != model.param_count())
    throw ContractViolation("estimate_property_bounds: parameter mismatch");

  const int n = model.dof();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::normal_distribution<double> gauss(0.0, 1.0);

  PropertyBounds b;
  b.lambda1 = std::numeric_limits<double>::infinity();

  for (int s = 0; s < sample_count; ++s) {
    Eigen::VectorXd q(n), dir(n);
    for (int j = 0; j < n; ++j) q(j) = angle(rng);
    for (int j = 0; j < n; ++j) dir(j) = gauss(rng);
    if (dir.norm() < 1e-12) dir.setOnes();
    dir.normalize();  // C is linear in q̇, so unit velocities suffice

    const DynamicsQuantities dq = model.dynamics(q, dir, pi);
    const Eigen::MatrixXd Msym = 0.5 * (dq.M + dq.M.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Msym);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    if (lo <= 0.0)
      throw NonPositiveDefiniteError(
          "mass matrix not positive definite at sampled configuration", q);

    b.lambda1 = std::min(b.lambda1, lo);
    b.lambda2 = std::max(b.lambda2, hi);
    b.lambda0 =
        std::max(b.lambda0, dq.C.jacobiSvd().singularValues().maxCoeff());
    b.gamma0 = std::max(b.gamma0, dq.g.norm());
  }
  return b;
}

}  // namespace uactrl
