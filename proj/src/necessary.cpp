#include "tetra/necessary.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "tetra/extremals.hpp"

namespace tetra {

CircularAction::CircularAction(std::initializer_list<double> weights)
    : alpha(static_cast<Eigen::Index>(weights.size())) {
  Eigen::Index k = 0;
  for (const double w : weights) alpha(k++) = w;
}

CircularAction CircularAction::coordinate(Eigen::Index dimension, Eigen::Index j) {
  if (j < 0 || j >= dimension) throw PreconditionError("coordinate index out of range");
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(dimension);
  alpha(j) = 1.0;
  return CircularAction(std::move(alpha));
}

Eigen::VectorXcd vector_field(const CircularAction& action, const Eigen::VectorXcd& z) {
  if (action.alpha.size() != z.size()) throw PreconditionError("vector_field: dimension mismatch");
  return Complex(0.0, 1.0) * (action.alpha.cast<Complex>().array() * z.array()).matrix();
}

Eigen::VectorXcd numeric_gradient(const std::function<Complex(const Eigen::VectorXcd&)>& F,
                                  const Eigen::VectorXcd& z, double step) {
  const Complex I(0.0, 1.0);
  const auto stencil = [&](Eigen::Index j, double h) {
    Eigen::VectorXcd zp = z;
    const auto at = [&](Complex dz) {
      zp(j) = z(j) + dz;
      return F(zp);
    };
    return (at(h) - at(-h) - I * at(I * h) + I * at(-I * h)) / (4.0 * h);
  };
  Eigen::VectorXcd grad(z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    // The stencil error is O(h^4); one Richardson step removes it.
    const Complex coarse = stencil(j, step);
    const Complex fine = stencil(j, 0.5 * step);
    grad(j) = (16.0 * fine - coarse) / 15.0;
  }
  return grad;
}

Eigen::VectorXcd gradient_of(const HolomorphicFunction& F, const Eigen::VectorXcd& z) {
  return F.has_analytic_gradient() ? F.gradient(z) : numeric_gradient(F.value, z);
}

Complex psi_of_lambda(const HolomorphicFunction& F, const VectorDisc& disc,
                      const CircularAction& action, Complex lambda) {
  const Eigen::VectorXcd z = disc(lambda);
  const Eigen::VectorXcd grad = gradient_of(F, z);
  if (!grad.allFinite()) throw NumericalError("psi_of_lambda: gradient is not finite");
  return grad.transpose() * vector_field(action, z);
}

Complex QuadraticFit::operator()(Complex lambda) const {
  return -std::conj(psi0) * lambda * lambda + Complex(0.0, C) * lambda + psi0;
}

QuadraticFit fit_quadratic_form(const std::vector<std::pair<Complex, Complex>>& samples) {
  if (samples.size() < 8) throw PreconditionError("fit_quadratic_form needs at least 8 samples");
  for (std::size_t a = 0; a < samples.size(); ++a) {
    for (std::size_t b = a + 1; b < samples.size(); ++b) {
      if (samples[a].first == samples[b].first) {
        throw PreconditionError("fit_quadratic_form needs distinct sample points");
      }
    }
  }
  const Complex I(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd A(2 * n, 3);
  Eigen::VectorXd rhs(2 * n);
  Eigen::MatrixXcd Z(n, 3);
  Eigen::VectorXcd y(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto [lambda, value] = samples[static_cast<std::size_t>(k)];
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw NumericalError("fit_quadratic_form: non-finite sample value");
    }
    const Complex l2 = lambda * lambda;
    // Columns: Re psi0, Im psi0, C.
    const Complex cols[3] = {1.0 - l2, I * (1.0 + l2), I * lambda};
    for (int c = 0; c < 3; ++c) {
      A(2 * k, c) = cols[c].real();
      A(2 * k + 1, c) = cols[c].imag();
    }
    rhs(2 * k) = value.real();
    rhs(2 * k + 1) = value.imag();
    Z.row(k) << l2, lambda, 1.0;
    y(k) = value;
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  if (qr.rank() < 3) throw NumericalError("fit_quadratic_form: rank-deficient design");
  const Eigen::Vector3d solution = qr.solve(rhs);

  QuadraticFit fit;
  fit.psi0 = Complex(solution(0), solution(1));
  fit.C = solution(2);
  for (const auto& [lambda, value] : samples) {
    fit.residual = std::max(fit.residual, std::abs(fit(lambda) - value));
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> free_qr(Z);
  if (free_qr.rank() == 3) {
    const Eigen::Vector3cd coeffs = free_qr.solve(y);
    fit.free_C_imag = (coeffs(1) / I).imag();
  }
  return fit;
}

std::vector<Complex> necessary_sample_points() {
  std::vector<Complex> out;
  for (const double r : {0.15, 0.35, 0.55, 0.75}) {
    for (int k = 0; k < 16; ++k) out.push_back(std::polar(r, 2.0 * std::numbers::pi * k / 16));
  }
  return out;
}

std::string_view to_string(NecessaryVerdict verdict) {
  switch (verdict) {
    case NecessaryVerdict::Pass:
      return "pass";
    case NecessaryVerdict::FitFailed:
      return "fit_failed";
    case NecessaryVerdict::HypothesisViolated:
      return "hypothesis_violated";
  }
  return "unknown";
}

NecessaryCheck geodesic_necessary_check(const HolomorphicFunction& F, const VectorDisc& disc,
                                        const CircularAction& action, double tol) {
  NecessaryCheck check;
  check.tolerance = tol > 0.0 ? tol : (F.has_analytic_gradient() ? 1e-7 : 1e-5);
  const auto points = necessary_sample_points();
  for (const Complex lambda : points) {
    check.hypothesis_residual =
        std::max(check.hypothesis_residual, std::abs(F.value(disc(lambda)) - lambda));
  }
  if (!(check.hypothesis_residual < 1e-8)) {
    check.verdict = NecessaryVerdict::HypothesisViolated;
    return check;
  }
  std::vector<std::pair<Complex, Complex>> samples;
  samples.reserve(points.size());
  for (const Complex lambda : points) {
    samples.emplace_back(lambda, psi_of_lambda(F, disc, action, lambda));
  }
  check.fit = fit_quadratic_form(samples);
  check.verdict =
      check.fit.residual < check.tolerance ? NecessaryVerdict::Pass : NecessaryVerdict::FitFailed;
  return check;
}

NecessaryCheck reinhardt_check(const HolomorphicFunction& F, const VectorDisc& disc, Eigen::Index j,
                               double tol) {
  const Eigen::Index n = disc(0.0).size();
  return geodesic_necessary_check(F, disc, CircularAction::coordinate(n, j), tol);
}

HolomorphicFunction origin_certificate_function(const OriginGeodesicParams& params) {
  const Complex eta = std::conj(params.omega1);
  const Complex rot = std::conj(params.omega2);
  const bool swapped = params.swapped;
  const auto base = [swapped](const Eigen::VectorXcd& z) {
    return swapped ? TetraPoint(z(1), z(0), z(2)) : TetraPoint(z(0), z(1), z(2));
  };
  HolomorphicFunction F;
  F.value = [=](const Eigen::VectorXcd& z) { return rot * psi_eta(eta, base(z)); };
  F.gradient = [=](const Eigen::VectorXcd& z) -> Eigen::VectorXcd {
    Eigen::Vector3cd g = rot * psi_eta_gradient(eta, base(z));
    if (swapped) std::swap(g(0), g(1));
    return g;
  };
  return F;
}

HolomorphicFunction g2_certificate_function(Complex omega) {
  HolomorphicFunction F;
  F.value = [omega](const Eigen::VectorXcd& w) { return g2_f(omega, G2Point(w(0), w(1))); };
  F.gradient = [omega](const Eigen::VectorXcd& w) -> Eigen::VectorXcd {
    return g2_f_gradient(omega, G2Point(w(0), w(1)));
  };
  return F;
}

HolomorphicFunction magic_function() {
  HolomorphicFunction F;
  F.value = [](const Eigen::VectorXcd& z) { return magic_f(TetraPoint(z(0), z(1), z(2))); };
  F.gradient = [](const Eigen::VectorXcd& z) -> Eigen::VectorXcd {
    return magic_f_gradient(TetraPoint(z(0), z(1), z(2)));
  };
  return F;
}

HolomorphicFunction coordinate_function(Eigen::Index n, Eigen::Index j) {
  if (j < 0 || j >= n) throw PreconditionError("coordinate index out of range");
  HolomorphicFunction F;
  F.value = [j](const Eigen::VectorXcd& z) { return z(j); };
  F.gradient = [n, j](const Eigen::VectorXcd&) -> Eigen::VectorXcd {
    return Eigen::VectorXcd::Unit(n, j);
  };
  return F;
}

HolomorphicFunction without_gradient(HolomorphicFunction F) {
  F.gradient = nullptr;
  return F;
}

VectorDisc as_vector_disc(TetraDisc disc) {
  return [disc = std::move(disc)](Complex lambda) -> Eigen::VectorXcd { return disc(lambda); };
}

VectorDisc as_vector_disc(G2Disc disc) {
  return [disc = std::move(disc)](Complex lambda) -> Eigen::VectorXcd { return disc(lambda); };
}

}  // namespace tetra
