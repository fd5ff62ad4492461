/**
 * @file simulate.hpp
 * @brief Advances the coupled plant + controller ODEs with one shared
 *        fixed-step RK4 integrator and records a trace.
 */

#ifndef UACTRL_SIMULATE_HPP_
#define UACTRL_SIMULATE_HPP_

#include <memory>

#include "uactrl/controller.hpp"
#include "uactrl/plant.hpp"
#include "uactrl/trace.hpp"

namespace uactrl {

enum class ControlLaw {
  None,                      // zero torque, frozen controller state
  FullyActuated,             // k = 0 tracking law
  Collocated,                // k ≥ 1 tracking law, plain adaptation
  CollocatedDesingularized,  // k ≥ 1 with the determinant-floor adaptation
};

const char* to_string(ControlLaw law);
ControlLaw control_law_from_string(const std::string& token);

/// Everything one run needs. Assembled by hand in tests or from a parsed
/// config by build_scenario().
struct Scenario {
  std::shared_ptr<const MechanicalModel> model;
  BaseParams pi_true;
  Eigen::VectorXd q0;
  Eigen::VectorXd qdot0;
  int noncollocated = 0;  // k

  ControlLaw law = ControlLaw::None;
  Gains gains;
  std::shared_ptr<const ReferenceSignal> reference;
  BaseParams pihat0;
  Eigen::VectorXd xi0;
  Eigen::VectorXd y0;  // −β; zero unless a nonzero β is configured

  double duration = 0.0;
  double step = 1e-3;
  int decimate = 1;
  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;

  FaultInjection fault;  // inactive unless a mutation harness sets it

  int dof() const { return static_cast<int>(q0.size()); }
  int collocated() const { return dof() - noncollocated; }
};

struct SimError {
  enum class Kind {
    SingularPlant,
    SingularMinor,
    Divergence,
    ControllerIdentity,
  };
  Kind kind;
  double t = 0.0;
  std::string detail;
};

const char* to_string(SimError::Kind kind);

struct SimResult {
  Trace trace;
  std::optional<SimError> error;
  bool ok() const { return !error.has_value(); }
};

/// Runs the scenario. Aborts cleanly on any numerical error, returning the
/// partial trace plus the error; divergence guard: any non-finite state or
/// |q̇|∞ > 1e3 rad/s.
SimResult simulate(const Scenario& scenario);

}  // namespace uactrl

#endif  // UACTRL_SIMULATE_HPP_
