#include "uactrl/reference.hpp"

#include <cmath>
#include <limits>

namespace uactrl {

namespace {

template <typename Segment>
void check_segments(const std::vector<Segment>& segments, int dim) {
  if (segments.empty())
    throw ContractViolation("reference needs at least one segment");
  double prev = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const bool last = (i + 1 == segments.size());
    if (!last && !(segments[i].until > prev))
      throw ContractViolation("segment switch times must strictly increase");
    prev = segments[i].until;
    (void)dim;
  }
}

template <typename Segment>
const Segment& active_segment(const std::vector<Segment>& segments, double t) {
  for (std::size_t i = 0; i + 1 < segments.size(); ++i)
    if (t < segments[i].until) return segments[i];
  return segments.back();
}

template <typename Segment>
std::vector<double> switch_times(const std::vector<Segment>& segments) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < segments.size(); ++i)
    out.push_back(segments[i].until);
  return out;
}

}  // namespace

PiecewiseConstantReference::PiecewiseConstantReference(
    std::vector<Segment> segments)
    : segments_(std::move(segments)) {
  dim_ = segments_.empty() ? 0 : static_cast<int>(segments_.front().value.size());
  check_segments(segments_, dim_);
  for (const auto& s : segments_)
    if (s.value.size() != dim_)
      throw ContractViolation("reference segments must share one dimension");
}

ReferenceSample PiecewiseConstantReference::eval(double t) const {
  const Segment& s = active_segment(segments_, t);
  return {s.value, Eigen::VectorXd::Zero(dim_), Eigen::VectorXd::Zero(dim_)};
}

std::vector<double> PiecewiseConstantReference::discontinuities() const {
  return switch_times(segments_);
}

PiecewiseSinusoidReference::PiecewiseSinusoidReference(
    std::vector<Segment> segments)
    : segments_(std::move(segments)) {
  dim_ = segments_.empty() ? 0
                           : static_cast<int>(segments_.front().offset.size());
  check_segments(segments_, dim_);
  for (const auto& s : segments_)
    if (s.amplitude.size() != dim_ || s.frequency.size() != dim_ ||
        s.offset.size() != dim_)
      throw ContractViolation("reference segments must share one dimension");
}

ReferenceSample PiecewiseSinusoidReference::eval(double t) const {
  const Segment& s = active_segment(segments_, t);
  ReferenceSample out;
  out.r.resize(dim_);
  out.rdot.resize(dim_);
  out.rddot.resize(dim_);
  for (int j = 0; j < dim_; ++j) {
    const double w = 2.0 * M_PI * s.frequency(j);
    out.r(j) = s.offset(j) + s.amplitude(j) * std::sin(w * t);
    out.rdot(j) = s.amplitude(j) * w * std::cos(w * t);
    out.rddot(j) = -s.amplitude(j) * w * w * std::sin(w * t);
  }
  return out;
}

std::vector<double> PiecewiseSinusoidReference::discontinuities() const {
  return switch_times(segments_);
}

}  // namespace uactrl
