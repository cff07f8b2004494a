#pragma once

#include <Eigen/Core>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "tetra/geodesics.hpp"
#include "tetra/hyperbolic.hpp"

namespace tetra {

/// Weights (a_1, ..., a_n) of the circle action z -> (e^{i a_1 t} z_1, ..., e^{i a_n t} z_n).
struct CircularAction {
  Eigen::VectorXd alpha;

  CircularAction() = default;
  explicit CircularAction(std::initializer_list<double> weights);
  explicit CircularAction(Eigen::VectorXd weights) : alpha(std::move(weights)) {}

  /// Weight 1 on coordinate j, 0 elsewhere.
  static CircularAction coordinate(Eigen::Index dimension, Eigen::Index j);
};

/// i (a_1 z_1, ..., a_n z_n).
Eigen::VectorXcd vector_field(const CircularAction& action, const Eigen::VectorXcd& z);

/// A holomorphic function on an open subset of C^n together with an optional
/// closed-form gradient.
struct HolomorphicFunction {
  std::function<Complex(const Eigen::VectorXcd&)> value;
  std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)> gradient;

  bool has_analytic_gradient() const { return static_cast<bool>(gradient); }
};

using VectorDisc = std::function<Eigen::VectorXcd(Complex)>;

/// Complex partial derivatives by the 4-point stencil (F(z+h) - F(z-h) - i F(z+ih)
/// + i F(z-ih)) / 4h per coordinate, step 1e-5, one Richardson extrapolation.
Eigen::VectorXcd numeric_gradient(const std::function<Complex(const Eigen::VectorXcd&)>& F,
                                  const Eigen::VectorXcd& z, double step = 1e-5);

Eigen::VectorXcd gradient_of(const HolomorphicFunction& F, const Eigen::VectorXcd& z);

/// sum_j dF/dz_j(f(l)) gamma_j(f(l)).
Complex psi_of_lambda(const HolomorphicFunction& F, const VectorDisc& disc,
                      const CircularAction& action, Complex lambda);

/// psi(l) = -conj(psi0) l^2 + i C l + psi0 with C real. Equivalently
/// psi / i = conj(a) l^2 + C l + a with a = -i psi0.
struct QuadraticFit {
  Complex psi0{0.0, 0.0};
  double C = 0.0;
  /// max |model - sample|.
  double residual = 0.0;
  /// Imaginary part of C in an unconstrained fit c2 l^2 + i C l + c0.
  double free_C_imag = 0.0;

  Complex a() const { return Complex(0.0, -1.0) * psi0; }
  Complex operator()(Complex lambda) const;
};

/// Real least squares over (Re psi0, Im psi0, C). Needs >= 8 distinct samples.
QuadraticFit fit_quadratic_form(const std::vector<std::pair<Complex, Complex>>& samples);

/// r e^{2 pi i k/16}, r in {0.15, 0.35, 0.55, 0.75}.
std::vector<Complex> necessary_sample_points();

enum class NecessaryVerdict { Pass, FitFailed, HypothesisViolated };
std::string_view to_string(NecessaryVerdict verdict);

struct NecessaryCheck {
  QuadraticFit fit;
  NecessaryVerdict verdict = NecessaryVerdict::FitFailed;
  /// max |F(f(l)) - l| over the sample points.
  double hypothesis_residual = 0.0;
  double tolerance = 0.0;
};

/// Tests the necessary form of psi for a disc with F o f = id. `tol <= 0` selects
/// 1e-7 with a closed-form gradient and 1e-5 with the numeric one.
NecessaryCheck geodesic_necessary_check(const HolomorphicFunction& F, const VectorDisc& disc,
                                        const CircularAction& action, double tol = 0.0);

/// Single-coordinate check on a Reinhardt domain (action weight 1 on coordinate j).
NecessaryCheck reinhardt_check(const HolomorphicFunction& F, const VectorDisc& disc, Eigen::Index j,
                               double tol = 0.0);

// Built-in functions with closed-form gradients.

/// conj(w2) Psi_{conj(w1)}, composed with the swap when the geodesic is swapped.
HolomorphicFunction origin_certificate_function(const OriginGeodesicParams& params);
/// g2_f(omega, .).
HolomorphicFunction g2_certificate_function(Complex omega);
/// z2 / sqrt(1 + z3 - z1 z2).
HolomorphicFunction magic_function();
/// z -> z_j on C^n.
HolomorphicFunction coordinate_function(Eigen::Index n, Eigen::Index j);
/// The same function with the closed-form gradient removed.
HolomorphicFunction without_gradient(HolomorphicFunction F);

VectorDisc as_vector_disc(TetraDisc disc);
VectorDisc as_vector_disc(G2Disc disc);

}  // namespace tetra
