#include "tetra/least_squares.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace tetra {

namespace {

Eigen::MatrixXd forward_jacobian(const ResidualFunction& residual, const Eigen::VectorXd& x,
                                 const Eigen::VectorXd& r0, long& evaluations) {
  Eigen::MatrixXd jac(r0.size(), x.size());
  Eigen::VectorXd xh = x;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const double h = 1.5e-8 * std::max(1.0, std::abs(x(j)));
    xh(j) = x(j) + h;
    jac.col(j) = (residual(xh) - r0) / h;
    ++evaluations;
    xh(j) = x(j);
  }
  return jac;
}

bool finite(const Eigen::VectorXd& v) { return v.allFinite(); }

}  // namespace

LevenbergMarquardtResult levenberg_marquardt(const ResidualFunction& residual, Eigen::VectorXd x0,
                                             const LevenbergMarquardtOptions& options,
                                             long& evaluations, long evaluation_limit) {
  LevenbergMarquardtResult result;
  result.x = std::move(x0);
  Eigen::VectorXd r = residual(result.x);
  ++evaluations;
  result.cost = finite(r) ? r.squaredNorm() : std::numeric_limits<double>::infinity();
  if (!finite(r)) return result;

  double damping = options.initial_damping;
  const Eigen::Index n = result.x.size();
  Eigen::MatrixXd jac = forward_jacobian(residual, result.x, r, evaluations);
  bool fresh_jacobian = true;

  for (int it = 0; it < options.max_iterations; ++it) {
    result.iterations = it + 1;
    if (result.cost <= options.cost_target || evaluations >= evaluation_limit) break;
    if (!fresh_jacobian) {
      jac = forward_jacobian(residual, result.x, r, evaluations);
      fresh_jacobian = true;
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd grad = jac.transpose() * r;
    bool accepted = false;
    for (int attempt = 0; attempt < 12 && !accepted; ++attempt) {
      Eigen::MatrixXd lhs = jtj;
      for (Eigen::Index j = 0; j < n; ++j) lhs(j, j) += damping * (jtj(j, j) + 1e-12);
      const Eigen::VectorXd step = lhs.ldlt().solve(-grad);
      if (!finite(step)) {
        damping *= 10.0;
        continue;
      }
      const Eigen::VectorXd candidate = result.x + step;
      const Eigen::VectorXd rc = residual(candidate);
      ++evaluations;
      const double cost = finite(rc) ? rc.squaredNorm() : std::numeric_limits<double>::infinity();
      if (cost < result.cost) {
        const double reduction = (result.cost - cost) / std::max(result.cost, 1e-300);
        result.x = candidate;
        r = rc;
        result.cost = cost;
        damping = std::max(damping / 3.0, 1e-12);
        accepted = true;
        fresh_jacobian = false;
        if (reduction < options.relative_tolerance) return result;
      } else {
        damping *= 4.0;
      }
      if (evaluations >= evaluation_limit) break;
    }
    if (!accepted) break;
  }
  return result;
}

}  // namespace tetra
