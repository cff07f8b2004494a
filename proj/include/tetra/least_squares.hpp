#pragma once

#include <Eigen/Core>
#include <functional>

namespace tetra {

/// Vector residual r(x) for a nonlinear least-squares problem min |r(x)|^2.
using ResidualFunction = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct LevenbergMarquardtOptions {
  int max_iterations = 100;
  /// Stop once the cost |r|^2 falls below this.
  double cost_target = 0.0;
  /// Stop when the relative cost reduction of an accepted step is below this.
  double relative_tolerance = 1e-15;
  double initial_damping = 1e-3;
};

struct LevenbergMarquardtResult {
  Eigen::VectorXd x;
  double cost = 0.0;
  int iterations = 0;
};

/// Damped Gauss-Newton with a forward-difference Jacobian. Every residual
/// evaluation increments `evaluations`; the solver returns early once
/// `evaluations >= evaluation_limit`.
LevenbergMarquardtResult levenberg_marquardt(const ResidualFunction& residual, Eigen::VectorXd x0,
                                             const LevenbergMarquardtOptions& options,
                                             long& evaluations, long evaluation_limit);

}  // namespace tetra
