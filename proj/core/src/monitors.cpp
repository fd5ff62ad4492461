#include "uactrl/monitors.hpp"

namespace uactrl {

namespace {

/// Integral state consistent with ξ c = ṙ − Λ1 e − Λ2 y at the current
/// instant (the stability argument's integration constant is absorbed here).
Eigen::VectorXd reconstructed_y(const JointState& state,
                                const ControllerState& ctrl, const Gains& gains,
                                const ReferenceSample& ref) {
  const int m = state.collocated();
  const Eigen::VectorXd e = state.qc() - ref.r;
  const Eigen::VectorXd xic = ctrl.xi.tail(m);
  return (ref.rdot - gains.Lambda1.cwiseProduct(e) - xic)
      .cwiseQuotient(gains.Lambda2);
}

}  // namespace

double lyapunov_value(const MechanicalModel& model, const JointState& state,
                      const ControllerState& ctrl, const Gains& gains,
                      const ReferenceSample& ref, const BaseParams& pi_true) {
  const int m = state.collocated();
  const Eigen::VectorXd e = state.qc() - ref.r;
  const Eigen::VectorXd s = state.qdot - ctrl.xi;
  const Eigen::VectorXd y = reconstructed_y(state, ctrl, gains, ref);

  const Eigen::MatrixXd M = eval_dynamics(model, state, pi_true).M;
  const Eigen::VectorXd pit = ctrl.pihat - pi_true;
  const Eigen::VectorXd gamma_inv_pit =
      Eigen::LLT<Eigen::MatrixXd>(gains.Gamma).solve(pit);

  double V = s.dot(M * s) + pit.dot(gamma_inv_pit);
  for (int j = 0; j < m; ++j) {
    V += 2.0 * gains.K(j) * gains.Lambda1(j) * e(j) * e(j);
    V += 2.0 * gains.Lambda1(j) * gains.K(j) * gains.Lambda2(j) * y(j) * y(j);
  }
  return 0.5 * V;
}

double lyapunov_rate(const MechanicalModel& model, const JointState& state,
                     const ControllerState& ctrl, const Gains& gains,
                     const ReferenceSample& ref, const BaseParams& pi_true) {
  const int k = state.noncollocated;
  const Eigen::VectorXd e = state.qc() - ref.r;
  const Eigen::VectorXd edot = state.qdotc() - ref.rdot;
  const Eigen::VectorXd s = state.qdot - ctrl.xi;
  const Eigen::VectorXd y = reconstructed_y(state, ctrl, gains, ref);

  const Eigen::VectorXd sn = s.head(k);
  const Eigen::VectorXd w = edot + gains.Lambda2.cwiseProduct(y);
  const Eigen::VectorXd l1e = gains.Lambda1.cwiseProduct(e);
  const Eigen::MatrixXd Fv =
      model.dynamics(state.q, state.qdot, pi_true).Fv;

  // Each term is a nonnegative quadratic form, so the sum stays ≤ 0 even in
  // floating point.
  double rate = 0.0;
  rate += sn.dot(gains.Kn.cwiseProduct(sn));
  rate += w.dot(gains.K.cwiseProduct(w));
  rate += s.dot(Fv * s);
  rate += l1e.dot(gains.K.cwiseProduct(l1e));
  return -rate;
}

bool kbar_psd_check(const Eigen::VectorXd& K_diag) {
  const int m = static_cast<int>(K_diag.size());
  for (int i = 0; i < m; ++i)
    if (!(K_diag(i) > 0.0))
      throw ContractViolation("kbar_psd_check requires a positive diagonal");

  Eigen::MatrixXd Kbar = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  const Eigen::MatrixXd K = K_diag.asDiagonal();
  Kbar.topLeftCorner(m, m) = K;
  Kbar.topRightCorner(m, m) = K;
  Kbar.bottomLeftCorner(m, m) = K;
  Kbar.bottomRightCorner(m, m) = K;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Kbar);
  return eig.eigenvalues().minCoeff() >= -1e-12;
}

DeterminantFloorReport determinant_floor_monitor(const Trace& trace,
                                                 double epsilon) {
  if (!(epsilon > 0.0))
    throw ContractViolation("determinant_floor_monitor requires ε > 0");
  DeterminantFloorReport report;
  report.threshold = epsilon;
  report.tolerance = 0.02 * epsilon;
  report.min_det = std::numeric_limits<double>::infinity();
  for (const TraceRecord& rec : trace.records) {
    if (rec.det_Mn_hat < report.min_det) {
      report.min_det = rec.det_Mn_hat;
      report.t_at_min = rec.t;
    }
  }
  report.ok = !trace.records.empty() &&
              report.min_det >= epsilon - report.tolerance;
  return report;
}

}  // namespace uactrl
