#include "uactrl/controller.hpp"

#include <cmath>
#include <sstream>

namespace uactrl {

namespace {

void require_positive_diag(const Eigen::VectorXd& d, long size,
                           const char* name) {
  if (d.size() != size) {
    std::ostringstream os;
    os << name << " must have " << size << " diagonal entries, got "
       << d.size();
    throw ContractViolation(os.str());
  }
  for (long i = 0; i < d.size(); ++i)
    if (!(d(i) > 0.0))
      throw ContractViolation(std::string(name) +
                              " diagonal entries must be positive");
}

/// Solve with a singularity guard; reports determinant on failure.
Eigen::FullPivLU<Eigen::MatrixXd> minor_lu(const Eigen::MatrixXd& Mn,
                                           double t) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Mn);
  const double smax = svd.singularValues().maxCoeff();
  const double smin = svd.singularValues().minCoeff();
  if (smax <= 0.0 || smax > 1e12 * smin)
    throw SingularMinorError("estimated mass minor singular or ill-conditioned",
                             Mn.determinant(), t);
  return Eigen::FullPivLU<Eigen::MatrixXd>(Mn);
}

}  // namespace

void Gains::validate(int k, int m, int p, bool need_epsilon) const {
  require_positive_diag(K, m, "K");
  require_positive_diag(Lambda1, m, "Lambda1");
  require_positive_diag(Lambda2, m, "Lambda2");
  if (k > 0) require_positive_diag(Kn, k, "Kn");
  if (Gamma.rows() != p || Gamma.cols() != p)
    throw ContractViolation("Gamma must be p×p");
  if ((Gamma - Gamma.transpose()).norm() > 1e-12 * (1.0 + Gamma.norm()))
    throw ContractViolation("Gamma must be symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(Gamma);
  if (llt.info() != Eigen::Success)
    throw ContractViolation("Gamma must be positive definite");
  if (need_epsilon && !(epsilon > 0.0))
    throw ContractViolation("epsilon must be > 0 for the desingularized law");
}

Eigen::MatrixXd regressor_mass_column(const MechanicalModel& model,
                                      const Eigen::VectorXd& q, int i, int k) {
  const int n = model.dof();
  if (k < 1 || k > n || i < 0 || i >= k)
    throw ContractViolation("regressor_mass_column: index out of range");
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd unit = Eigen::VectorXd::Zero(n);
  unit(i) = 1.0;
  return (model.regressor(q, zero, zero, unit) -
          model.regressor(q, zero, zero, zero))
      .topRows(k);
}

Eigen::MatrixXd grad_q_mass_column(const MechanicalModel& model,
                                   const Eigen::VectorXd& q,
                                   const BaseParams& pihat, int i, int k) {
  if (k < 1 || k > model.dof() || i < 0 || i >= k)
    throw ContractViolation("grad_q_mass_column: index out of range");
  return model.mass_minor_gradient(q, pihat, i, k);
}

AdaptationTerms desingularized_adaptation(
    const MechanicalModel& model, const Eigen::VectorXd& q,
    const Eigen::VectorXd& qdot, const Eigen::VectorXd& xi,
    const Eigen::VectorXd& xidot, const Eigen::VectorXd& s,
    const BaseParams& pihat, const Gains& gains, int k) {
  const int p = model.param_count();
  const Eigen::MatrixXd Mn = mass_minor_estimate(model, q, pihat, k);
  const double det = Mn.determinant();
  if (!(det > 0.0))
    throw SingularMinorError("desingularized adaptation requires det(M̂n) > 0",
                             det, std::nan(""));

  const Eigen::FullPivLU<Eigen::MatrixXd> lu(Mn);
  const Eigen::MatrixXd Y = model.regressor(q, qdot, xi, xidot);
  const Eigen::VectorXd grad = Y.transpose() * s;  // Yᵀ s

  Eigen::VectorXd delta = Eigen::VectorXd::Zero(p);
  Eigen::MatrixXd Upsilon(k, k);
  for (int i = 0; i < k; ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(k);
    ei(i) = 1.0;
    const Eigen::MatrixXd Ymn = regressor_mass_column(model, q, i, k);
    delta += Ymn.transpose() * lu.solve(ei);
    Upsilon.col(i) = grad_q_mass_column(model, q, pihat, i, k) * qdot -
                     Ymn * (gains.Gamma * grad);
  }

  AdaptationTerms out;
  out.delta = delta;
  const double trace_term = lu.solve(Upsilon).trace();
  if (trace_term >= 0.0 || det > gains.epsilon) {
    out.eta = 0.0;
  } else {
    const double dgd = delta.dot(gains.Gamma * delta);
    // Lemma: |δ| > 0 whenever det(M̂n) > 0, so this cannot trigger with a
    // well-posed Γ; kept as a guard against degenerate inputs.
    if (dgd < 1e-14)
      throw SingularMinorError("δᵀΓδ vanished in the desingularized law", det,
                               std::nan(""));
    out.eta = -trace_term / dgd;
  }
  out.pihatdot = -gains.Gamma * (grad - out.eta * delta);
  return out;
}

namespace detail {

ControlOutput tracking_control(const MechanicalModel& model, double t,
                               const JointState& state,
                               const ControllerState& ctrl, const Gains& gains,
                               const ReferenceSignal& ref, AdaptationLaw law,
                               const FaultInjection* fault) {
  state.validate();
  const int n = state.dof();
  const int k = state.noncollocated;
  const int m = state.collocated();
  const int p = model.param_count();
  if (n != model.dof())
    throw ContractViolation("tracking_control: state/model dof mismatch");
  if (ctrl.xi.size() != n || ctrl.pihat.size() != p || ctrl.y.size() != m)
    throw ContractViolation("tracking_control: controller state dimensions");
  if (ref.dim() != m)
    throw ContractViolation("tracking_control: reference dimension != m");
  gains.validate(k, m, p, law == AdaptationLaw::Desingularized);

  const ReferenceSample rs = ref.eval(t);

  ControlOutput out;
  out.e = state.qc() - rs.r;
  const Eigen::VectorXd edot = state.qdotc() - rs.rdot;

  Eigen::VectorXd xidot_c =
      rs.rddot - gains.Lambda1.cwiseProduct(edot);
  if (!(fault && fault->drop_position_term))
    xidot_c -= gains.Lambda2.cwiseProduct(out.e);

  out.s = state.qdot - ctrl.xi;
  const Eigen::VectorXd sn = out.s.head(k);
  const Eigen::VectorXd sc = out.s.tail(m);

  out.xidot.resize(n);
  if (k > 0) {
    const Eigen::MatrixXd Mn = mass_minor_estimate(model, state.q, ctrl.pihat, k);
    const Eigen::FullPivLU<Eigen::MatrixXd> lu = minor_lu(Mn, t);

    Eigen::VectorXd xidot_partial = Eigen::VectorXd::Zero(n);
    xidot_partial.tail(m) = xidot_c;
    const Eigen::VectorXd yn_pi =
        (model.regressor(state.q, state.qdot, ctrl.xi, xidot_partial) *
         ctrl.pihat)
            .head(k);

    Eigen::VectorXd damping = gains.Kn.cwiseProduct(sn);
    if (fault && fault->drop_noncollocated_damping) damping.setZero();
    out.xidot.head(k) = lu.solve(damping - yn_pi);
  }
  out.xidot.tail(m) = xidot_c;

  const Eigen::MatrixXd Y =
      model.regressor(state.q, state.qdot, ctrl.xi, out.xidot);

  out.delta = Eigen::VectorXd::Zero(p);
  out.eta = 0.0;
  if (law == AdaptationLaw::Desingularized && k > 0) {
    AdaptationTerms ad;
    try {
      ad = desingularized_adaptation(model, state.q, state.qdot, ctrl.xi,
                                     out.xidot, out.s, ctrl.pihat, gains, k);
    } catch (const SingularMinorError& err) {
      throw SingularMinorError(err.what(), err.determinant(), t);
    }
    out.eta = ad.eta;
    out.delta = ad.delta;
    if (fault && fault->eta_sign != 1.0 && ad.eta != 0.0) {
      out.eta = fault->eta_sign * ad.eta;
      out.pihatdot =
          -gains.Gamma * (Y.transpose() * out.s - out.eta * out.delta);
    } else {
      out.pihatdot = ad.pihatdot;
    }
  } else {
    out.pihatdot = -gains.Gamma * (Y.transpose() * out.s);
    // δ is still well defined away from the singularity; record it so the
    // identity π̂ᵀδ = k can be monitored on plain-law traces too.
    if (k > 0) {
      const Eigen::MatrixXd Mn =
          mass_minor_estimate(model, state.q, ctrl.pihat, k);
      if (Mn.determinant() > 1e-6) {
        const Eigen::FullPivLU<Eigen::MatrixXd> lu(Mn);
        for (int i = 0; i < k; ++i) {
          Eigen::VectorXd ei = Eigen::VectorXd::Zero(k);
          ei(i) = 1.0;
          out.delta +=
              regressor_mass_column(model, state.q, i, k).transpose() *
              lu.solve(ei);
        }
      }
    }
  }

  out.tau_bar = Y.bottomRows(m) * ctrl.pihat - gains.K.cwiseProduct(sc);

  if (k > 0) {
    // Defining property of ξ̇ n: Y n(q,q̇,ξ,ξ̇) π̂ = K n s n.
    const double residual =
        ((Y * ctrl.pihat).head(k) - gains.Kn.cwiseProduct(sn)).norm();
    if (residual > 1e-9 * (1.0 + ctrl.pihat.norm()))
      throw ControllerIdentityError(
          "fictitious-input identity violated: |Yn·π̂ − Kn·sn| too large", t,
          residual);
  }
  return out;
}

}  // namespace detail

ControlOutput fully_actuated_control(const MechanicalModel& model, double t,
                                     const JointState& state,
                                     const ControllerState& ctrl,
                                     const Gains& gains,
                                     const ReferenceSignal& ref) {
  if (state.noncollocated != 0)
    throw ContractViolation("fully_actuated_control requires k == 0");
  return detail::tracking_control(model, t, state, ctrl, gains, ref,
                                  AdaptationLaw::Plain, nullptr);
}

ControlOutput collocated_control(const MechanicalModel& model, double t,
                                 const JointState& state,
                                 const ControllerState& ctrl,
                                 const Gains& gains, const ReferenceSignal& ref,
                                 AdaptationLaw law,
                                 const FaultInjection* fault) {
  if (state.noncollocated < 1)
    throw ContractViolation(
        "collocated_control requires k >= 1; use fully_actuated_control");
  return detail::tracking_control(model, t, state, ctrl, gains, ref, law,
                                  fault);
}

}  // namespace uactrl
