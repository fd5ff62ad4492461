/**
 * @file integrator.hpp
 * @brief Fixed-step classical Runge-Kutta 4 for coupled plant/controller ODEs.
 */

#ifndef UACTRL_INTEGRATOR_HPP_
#define UACTRL_INTEGRATOR_HPP_

#include <Eigen/Core>
#include <utility>

#include "uactrl/errors.hpp"

namespace uactrl {

/// One classical RK4 step. `deriv` is a pure function (t, x) -> dx/dt.
/// Throws DivergenceError carrying t and the stage index (1..4) if a stage
/// derivative is non-finite.
template <typename Deriv>
Eigen::VectorXd rk4_step(Deriv&& deriv, double t, const Eigen::VectorXd& x,
                         double h) {
  if (!(h > 0.0)) throw ContractViolation("rk4_step requires h > 0");

  auto stage = [&](double ts, const Eigen::VectorXd& xs,
                   int index) -> Eigen::VectorXd {
    Eigen::VectorXd k = deriv(ts, xs);
    if (!k.allFinite())
      throw DivergenceError("non-finite derivative in RK4 stage", t, index);
    return k;
  };

  const Eigen::VectorXd k1 = stage(t, x, 1);
  const Eigen::VectorXd k2 = stage(t + 0.5 * h, x + (0.5 * h) * k1, 2);
  const Eigen::VectorXd k3 = stage(t + 0.5 * h, x + (0.5 * h) * k2, 3);
  const Eigen::VectorXd k4 = stage(t + h, x + h * k3, 4);
  return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace uactrl

#endif  // UACTRL_INTEGRATOR_HPP_
