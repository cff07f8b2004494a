#pragma once

#include <Eigen/Core>
#include <array>
#include <complex>
#include <optional>
#include <string_view>

#include "tetra/angle_search.hpp"
#include "tetra/hyperbolic.hpp"

namespace tetra {

template <typename Scalar>
using TetraPointT = Eigen::Matrix<std::complex<Scalar>, 3, 1>;
template <typename Scalar>
using G2PointT = Eigen::Matrix<std::complex<Scalar>, 2, 1>;

/// A point (z1, z2, z3) of C^3, tested against the tetrablock.
using TetraPoint = TetraPointT<double>;
/// A point (s, p) of C^2, tested against the symmetrized bidisc.
using G2Point = G2PointT<double>;

inline constexpr double kBoundaryTol = 1e-10;

enum class Location { Interior, Boundary, Exterior };

std::string_view to_string(Location location);

struct MembershipReport {
  Location location = Location::Exterior;
  double e_value = 0.0;
  std::optional<double> psi_sup;
  double tolerance_used = kBoundaryTol;
};

struct G2MembershipReport {
  Location location = Location::Exterior;
  double max_root_modulus = 0.0;
  std::array<Complex, 2> roots{};
  double tolerance_used = kBoundaryTol;
};

/// |z1 - conj(z2) z3| + |z2 - conj(z1) z3| + |z3|^2. The tetrablock is the set where
/// this is < 1.
template <typename Scalar>
Scalar tetra_e_value(const TetraPointT<Scalar>& z) {
  return std::abs(z(0) - std::conj(z(1)) * z(2)) + std::abs(z(1) - std::conj(z(0)) * z(2)) +
         std::norm(z(2));
}

/// (eta z3 - z2) / (eta z1 - 1) with no pole check.
template <typename Scalar>
std::complex<Scalar> psi_quotient(const std::complex<Scalar>& eta, const TetraPointT<Scalar>& z) {
  return (eta * z(2) - z(1)) / (eta * z(0) - Scalar(1));
}

Location classify(double e_value, double tol);

MembershipReport tetra_membership(const TetraPoint& z, double tol = kBoundaryTol,
                                  bool with_psi_sup = false);

inline bool is_interior(const TetraPoint& z, double tol = kBoundaryTol) {
  return tetra_e_value(z) < 1.0 - tol;
}

/// sup over |eta| = 1 of |Psi_eta(z)|; by the maximum principle in eta this is also the
/// sup over the closed disc. Requires |z1| < 1.
double psi_sup(const TetraPoint& z, AngleGrid grid = {1024, 40});

/// Roots of t^2 - s t + p computed without cancellation near double roots.
std::array<Complex, 2> symmetric_roots(Complex s, Complex p);

/// (lambda + mu, lambda mu).
G2Point g2_from_roots(Complex lambda, Complex mu);

G2MembershipReport g2_membership(const G2Point& w, double tol = kBoundaryTol);

/// (lambda, mu, lambda mu): the embedding of the bidisc onto the set {z1 z2 = z3}.
TetraPoint product_embedding(Complex lambda, Complex mu);

/// Quasi-homogeneous gauge: the least t > 0 with (z1/t, z2/t, z3/t^2) in the tetrablock,
/// located by bisection to absolute tolerance `tol`. rho(0) = 0.
double rho_functional(const TetraPoint& z, double tol = 1e-12);

/// (t z1, t z2, t^2 z3).
TetraPoint quasi_scale(const TetraPoint& z, Complex t);

}  // namespace tetra
