/**
 * @file reference.hpp
 * @brief Reference trajectories r(t) with analytic first and second
 *        derivatives, piecewise with right-continuous switching.
 */

#ifndef UACTRL_REFERENCE_HPP_
#define UACTRL_REFERENCE_HPP_

#include <Eigen/Core>
#include <memory>
#include <vector>

#include "uactrl/errors.hpp"

namespace uactrl {

struct ReferenceSample {
  Eigen::VectorXd r;
  Eigen::VectorXd rdot;
  Eigen::VectorXd rddot;
};

class ReferenceSignal {
 public:
  virtual ~ReferenceSignal() = default;
  virtual int dim() const = 0;
  /// Value and derivatives at t; at a switch instant the segment starting
  /// there is used (right limit). Beyond the last switch time the final
  /// segment extends indefinitely.
  virtual ReferenceSample eval(double t) const = 0;
  /// Instants where r, ṙ, or r̈ may jump. Per-step monitors skip steps that
  /// cross these.
  virtual std::vector<double> discontinuities() const { return {}; }
};

/// Piecewise-constant reference: ṙ = r̈ = 0 inside segments.
class PiecewiseConstantReference final : public ReferenceSignal {
 public:
  struct Segment {
    double until;       // active while t < until; +inf extends forever
    Eigen::VectorXd value;
  };

  explicit PiecewiseConstantReference(std::vector<Segment> segments);

  int dim() const override { return dim_; }
  ReferenceSample eval(double t) const override;
  std::vector<double> discontinuities() const override;

 private:
  std::vector<Segment> segments_;
  int dim_;
};

/// Piecewise sinusoid r(t) = offset + amplitude·sin(2π f t), evaluated on the
/// absolute time axis, with per-segment amplitude/frequency/offset.
class PiecewiseSinusoidReference final : public ReferenceSignal {
 public:
  struct Segment {
    double until;
    Eigen::VectorXd amplitude;
    Eigen::VectorXd frequency;  // Hz
    Eigen::VectorXd offset;
  };

  explicit PiecewiseSinusoidReference(std::vector<Segment> segments);

  int dim() const override { return dim_; }
  ReferenceSample eval(double t) const override;
  std::vector<double> discontinuities() const override;

 private:
  std::vector<Segment> segments_;
  int dim_;
};

}  // namespace uactrl

#endif  // UACTRL_REFERENCE_HPP_
