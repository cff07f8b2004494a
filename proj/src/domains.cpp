#include "tetra/domains.hpp"

#include <algorithm>
#include <cmath>

namespace tetra {

std::string_view to_string(Location location) {
  switch (location) {
    case Location::Interior:
      return "interior";
    case Location::Boundary:
      return "boundary";
    case Location::Exterior:
      return "exterior";
  }
  return "unknown";
}

Location classify(double e_value, double tol) {
  if (e_value < 1.0 - tol) return Location::Interior;
  if (std::abs(e_value - 1.0) <= tol) return Location::Boundary;
  return Location::Exterior;
}

MembershipReport tetra_membership(const TetraPoint& z, double tol, bool with_psi_sup) {
  if (!(tol > 0.0)) throw PreconditionError("membership tolerance must be positive");
  MembershipReport report;
  report.e_value = tetra_e_value(z);
  report.location = classify(report.e_value, tol);
  report.tolerance_used = tol;
  if (with_psi_sup && std::abs(z(0)) < 1.0) report.psi_sup = psi_sup(z);
  return report;
}

double psi_sup(const TetraPoint& z, AngleGrid grid) {
  if (!(std::abs(z(0)) < 1.0)) throw PreconditionError("psi_sup requires |z1| < 1");
  const auto objective = [&z](double angle) {
    return std::abs(psi_quotient(std::polar(1.0, angle), z));
  };
  return maximize_on_circle(objective, grid).value;
}

std::array<Complex, 2> symmetric_roots(Complex s, Complex p) {
  const Complex sq = std::sqrt(s * s - 4.0 * p);
  // Pick the sign that adds s and sq constructively.
  const Complex q = (std::real(std::conj(s) * sq) >= 0.0 ? s + sq : s - sq) / 2.0;
  if (q == Complex(0.0, 0.0)) return {Complex(0.0, 0.0), Complex(0.0, 0.0)};
  return {q, p / q};
}

G2Point g2_from_roots(Complex lambda, Complex mu) { return G2Point(lambda + mu, lambda * mu); }

G2MembershipReport g2_membership(const G2Point& w, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("membership tolerance must be positive");
  G2MembershipReport report;
  report.roots = symmetric_roots(w(0), w(1));
  report.max_root_modulus = std::max(std::abs(report.roots[0]), std::abs(report.roots[1]));
  report.location = classify(report.max_root_modulus, tol);
  report.tolerance_used = tol;
  return report;
}

TetraPoint product_embedding(Complex lambda, Complex mu) {
  return TetraPoint(lambda, mu, lambda * mu);
}

TetraPoint quasi_scale(const TetraPoint& z, Complex t) {
  return TetraPoint(t * z(0), t * z(1), t * t * z(2));
}

double rho_functional(const TetraPoint& z, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("rho tolerance must be positive");
  if (z.isZero(0.0)) return 0.0;
  // Star-likeness of the domain under the quasi-homogeneous action makes the
  // membership of the rescaled point monotone in t.
  const auto inside = [&z](double t) { return tetra_e_value(quasi_scale(z, 1.0 / t)) < 1.0; };
  double lo = 0.0;
  double hi = 2.0 * std::max({std::abs(z(0)), std::abs(z(1)), std::sqrt(std::abs(z(2))), 1.0});
  while (!inside(hi)) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (inside(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace tetra
