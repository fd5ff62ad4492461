#ifndef UACTRL_ERRORS_HPP_
#define UACTRL_ERRORS_HPP_

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace uactrl {

/// Thrown when an argument violates a documented dimension or value contract.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Plant mass matrix not invertible at the reported configuration.
class SingularPlantError : public std::runtime_error {
 public:
  SingularPlantError(const std::string& what, Eigen::VectorXd q)
      : std::runtime_error(what), q_(std::move(q)) {}
  const Eigen::VectorXd& configuration() const { return q_; }

 private:
  Eigen::VectorXd q_;
};

/// Estimated leading principal minor singular or ill-conditioned; carries
/// det(M̂ n) and the controller time at which it happened.
class SingularMinorError : public std::runtime_error {
 public:
  SingularMinorError(const std::string& what, double det, double t)
      : std::runtime_error(what), det_(det), t_(t) {}
  double determinant() const { return det_; }
  double time() const { return t_; }

 private:
  double det_;
  double t_;
};

/// Non-finite derivative inside an integrator stage.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, double t, int stage)
      : std::runtime_error(what), t_(t), stage_(stage) {}
  double time() const { return t_; }
  int stage() const { return stage_; }

 private:
  double t_;
  int stage_;
};

/// Sampled mass matrix not positive definite; carries the violating q.
class NonPositiveDefiniteError : public std::runtime_error {
 public:
  NonPositiveDefiniteError(const std::string& what, Eigen::VectorXd q)
      : std::runtime_error(what), q_(std::move(q)) {}
  const Eigen::VectorXd& configuration() const { return q_; }

 private:
  Eigen::VectorXd q_;
};

}  // namespace uactrl

#endif  // UACTRL_ERRORS_HPP_
