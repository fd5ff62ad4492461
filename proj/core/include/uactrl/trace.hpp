/**
 * @file trace.hpp
 * @brief One row per simulation step of every monitored signal.
 */

#ifndef UACTRL_TRACE_HPP_
#define UACTRL_TRACE_HPP_

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uactrl {

struct TraceRecord {
  double t = 0.0;
  Eigen::VectorXd q;        // n
  Eigen::VectorXd qdot;     // n
  Eigen::VectorXd e;        // m
  Eigen::VectorXd s;        // n
  Eigen::VectorXd xi;       // n
  Eigen::VectorXd pihat;    // p
  Eigen::VectorXd tau_bar;  // m
  double det_Mn_hat = 1.0;  // 1 for fully actuated runs
  double eta = 0.0;
  double V = 0.0;
  double Vdot = 0.0;
  double pihat_delta_identity = 0.0;  // π̂ᵀδ − k; 0 when δ is not computable
};

struct TraceMeta {
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
  int n = 0, k = 0, m = 0, p = 0;
  double step = 0.0;
  int decimate = 1;
  std::string law;
  std::optional<std::string> abort_note;
};

struct Trace {
  TraceMeta meta;
  std::vector<TraceRecord> records;
};

}  // namespace uactrl

#endif  // UACTRL_TRACE_HPP_
