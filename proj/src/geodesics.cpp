#include "tetra/geodesics.hpp"

#include <cmath>
#include <numbers>

#include "tetra/extremals.hpp"

namespace tetra {

namespace {

void require_C(double C, double lo, double hi, bool hi_open, const char* what) {
  const bool ok = C >= lo && (hi_open ? C < hi : C <= hi);
  if (!ok) throw PreconditionError(std::string(what) + ": C out of range");
}

DiscVerdict verdict_for(double max_e, double residual, double tol) {
  if (!(max_e < 1.0)) return DiscVerdict::Failed;
  return residual < tol ? DiscVerdict::GeodesicVerified : DiscVerdict::InDomainOnly;
}

}  // namespace

std::string_view to_string(DiscVerdict verdict) {
  switch (verdict) {
    case DiscVerdict::GeodesicVerified:
      return "geodesic_verified";
    case DiscVerdict::InDomainOnly:
      return "in_domain_only";
    case DiscVerdict::Failed:
      return "failed";
  }
  return "unknown";
}

std::string_view to_string(DiscClassification classification) {
  switch (classification) {
    case DiscClassification::AllInterior:
      return "all_interior";
    case DiscClassification::AllBoundary:
      return "all_boundary";
    case DiscClassification::Mixed:
      return "mixed";
  }
  return "unknown";
}

void OriginGeodesicParams::validate() const {
  require_C(C, 0.0, 1.0, false, "origin geodesic");
  require_unimodular(omega1, "omega1", 1e-10);
  require_unimodular(omega2, "omega2", 1e-10);
  if (std::abs(phi(0.0) + C) > 1e-12) throw PreconditionError("origin geodesic needs phi(0) = -C");
}

void GeneralDiscParams::validate() const {
  require_C(C, 0.0, 1.0, true, "general disc");
  require_unimodular(omega1, "omega1", 1e-10);
  require_unimodular(omega2, "omega2", 1e-10);
}

void G2GeodesicParams::validate() const {
  require_C(C, 1.0, 2.0, false, "symmetrized bidisc geodesic");
  require_unimodular(omega, "omega", 1e-10);
}

BlaschkeMap phi_through(double C, double scale, Complex unimodular,
                        std::vector<Complex> extra_zeros) {
  require_C(C, 0.0, 1.0, false, "phi_through");
  if (C >= 1.0) return BlaschkeMap::constant(-1.0);
  if (scale == 0.0) return BlaschkeMap::constant(-C);
  if (scale < 0.0) {
    scale = -scale;
    unimodular = -unimodular;
  }
  std::vector<Complex> zeros{Complex(0.0, 0.0)};
  zeros.insert(zeros.end(), extra_zeros.begin(), extra_zeros.end());
  return BlaschkeMap(unimodular, std::move(zeros), std::min(scale, 1.0), Complex(-C, 0.0));
}

TetraPoint eval_origin_geodesic(const OriginGeodesicParams& p, Complex lambda) {
  require_open_disc(lambda, "lambda");
  const Complex phi = p.phi(lambda);
  const TetraPoint f(p.omega1 * (phi + p.C) / (1.0 + p.C),
                     p.omega2 * lambda * (1.0 + p.C * phi) / (1.0 + p.C),
                     p.omega1 * p.omega2 * lambda * phi);
  return p.swapped ? sigma(f) : f;
}

TetraPoint eval_general_disc(const GeneralDiscParams& p, Complex lambda) {
  require_open_disc(lambda, "lambda");
  const Complex phi = p.phi(lambda);
  const Complex psi = p.psi(lambda);
  return TetraPoint(p.omega1 * (phi + p.C) / (1.0 + p.C),
                    p.omega2 * psi * (1.0 + p.C * phi) / (1.0 + p.C),
                    p.omega1 * p.omega2 * phi * psi);
}

TetraPoint eval_boundary_disc(double C, Complex omega1, Complex omega2, const BlaschkeMap& phi,
                              Complex lambda) {
  require_C(C, 0.0, 1.0, false, "boundary disc");
  require_open_disc(lambda, "lambda");
  const Complex v = phi(lambda);
  return TetraPoint(omega1 * (v + C) / (1.0 + C), omega2 * (1.0 + C * v) / (1.0 + C),
                    omega1 * omega2 * v);
}

Complex origin_geodesic_certificate(const OriginGeodesicParams& p, const TetraPoint& z) {
  const TetraPoint base = p.swapped ? sigma(z) : z;
  return std::conj(p.omega2) * psi_eta(std::conj(p.omega1), base);
}

std::vector<Complex> residual_sample_points(int roots) {
  std::vector<Complex> out;
  out.reserve(9 * roots);
  for (int r = 1; r <= 9; ++r) {
    for (int k = 0; k < roots; ++k) {
      out.push_back(std::polar(0.1 * r, 2.0 * std::numbers::pi * k / roots));
    }
  }
  return out;
}

DiscVerificationReport verify_origin_geodesic(const OriginGeodesicParams& params, double tol) {
  params.validate();
  DiscVerificationReport report;
  const auto samples = residual_sample_points();
  report.samples = static_cast<int>(samples.size());
  for (const Complex lambda : samples) {
    const TetraPoint z = eval_origin_geodesic(params, lambda);
    report.max_e_value = std::max(report.max_e_value, tetra_e_value(z));
    report.left_inverse_residual = std::max(
        report.left_inverse_residual, std::abs(origin_geodesic_certificate(params, z) - lambda));
  }
  report.verdict = verdict_for(report.max_e_value, report.left_inverse_residual, tol);
  return report;
}

DiscVerificationReport verify_general_disc(const GeneralDiscParams& params, double tol) {
  params.validate();
  DiscVerificationReport report;
  const auto samples = residual_sample_points();
  report.samples = static_cast<int>(samples.size());
  const bool certifiable = params.psi.is_automorphism();
  report.left_inverse_residual = certifiable ? 0.0 : std::numeric_limits<double>::infinity();
  for (const Complex lambda : samples) {
    const TetraPoint z = eval_general_disc(params, lambda);
    report.max_e_value = std::max(report.max_e_value, tetra_e_value(z));
    if (certifiable) {
      const Complex rotated = std::conj(params.omega2) * psi_eta(std::conj(params.omega1), z);
      report.left_inverse_residual =
          std::max(report.left_inverse_residual, std::abs(params.psi.inverse(rotated) - lambda));
    }
  }
  report.verdict = verdict_for(report.max_e_value, report.left_inverse_residual, tol);
  return report;
}

Complex removable_quotient(const std::function<Complex(Complex)>& h, Complex lambda) {
  constexpr double radius = 1e-5;
  constexpr int points = 64;
  if (std::abs(lambda) >= 0.5 * radius) return h(lambda) / lambda;
  Complex sum(0.0, 0.0);
  for (int k = 0; k < points; ++k) {
    const Complex zeta = lambda + std::polar(radius, 2.0 * std::numbers::pi * k / points);
    sum += h(zeta) / zeta;
  }
  return sum / static_cast<double>(points);
}

TetraDisc transport_disc(TetraDisc disc) {
  const TetraPoint at_zero = disc(0.0);
  if (std::abs(at_zero(0)) > 1e-12 || std::abs(at_zero(2)) > 1e-12) {
    throw PreconditionError("transport_disc requires f1(0) = f3(0) = 0");
  }
  return [disc = std::move(disc)](Complex lambda) -> TetraPoint {
    const auto first = [&](Complex l) { return disc(l)(0); };
    const auto third = [&](Complex l) { return disc(l)(2); };
    return TetraPoint(removable_quotient(first, lambda), disc(lambda)(1),
                      removable_quotient(third, lambda));
  };
}

DiscClassification classify_disc(const TetraDisc& disc, const std::vector<Complex>& samples,
                                 double tol) {
  bool all_interior = true;
  bool all_boundary = true;
  for (const Complex lambda : samples) {
    const double e = tetra_e_value(disc(lambda));
    if (!(e < 1.0 - tol)) all_interior = false;
    if (!(std::abs(e - 1.0) <= tol)) all_boundary = false;
  }
  if (all_interior) return DiscClassification::AllInterior;
  if (all_boundary) return DiscClassification::AllBoundary;
  return DiscClassification::Mixed;
}

TetraPoint cor43_extremal(double C, Complex omega1, Complex omega2, const BlaschkeMap& phi,
                          Complex lambda) {
  if (!(C > 0.0 && C < 1.0)) throw PreconditionError("cor43_extremal: C must lie in (0, 1)");
  if (phi.is_automorphism()) throw PreconditionError("cor43_extremal: phi is an automorphism");
  if (std::abs(phi(0.0) + C) > 1e-12) throw PreconditionError("cor43_extremal needs phi(0) = -C");
  require_unimodular(omega1, "omega1", 1e-10);
  require_unimodular(omega2, "omega2", 1e-10);
  require_open_disc(lambda, "lambda");
  const Complex ratio = removable_quotient([&](Complex l) { return phi(l) + C; }, lambda);
  const Complex v = phi(lambda);
  return TetraPoint(omega1 * ratio / (1.0 + C), omega2 * lambda * (1.0 + C * v) / (1.0 + C),
                    omega1 * omega2 * v);
}

HyperbolicDistance lempert_special(Complex z, Complex w) {
  if (!(std::abs(z) + std::abs(w) < 1.0)) {
    throw PreconditionError("lempert_special requires |z| + |w| < 1");
  }
  return HyperbolicDistance::from_m(std::abs(z) / (1.0 - std::abs(w)));
}

ProductDiscSample product_disc(const BlaschkeMap& a, const BlaschkeMap& b, Complex lambda) {
  require_open_disc(lambda, "lambda");
  const Complex av = a(lambda);
  const Complex bv = b(lambda);
  return {TetraPoint(av, bv, av * bv), a.is_automorphism() || b.is_automorphism()};
}

G2Point g2_origin_geodesic(double C, Complex omega, Complex lambda) {
  const Complex t = omega * lambda * (1.0 - C);
  return G2Point(2.0 * (2.0 - C) * lambda / (t - 1.0),
                 lambda * (lambda - std::conj(omega) * (1.0 - C)) / (1.0 - t));
}

G2Point g2_origin_geodesic(const G2GeodesicParams& params, Complex lambda) {
  require_open_disc(lambda, "lambda");
  return g2_origin_geodesic(params.C, params.omega, lambda);
}

DiscVerificationReport verify_g2_geodesic(const G2GeodesicParams& params, double tol) {
  params.validate();
  DiscVerificationReport report;
  const auto samples = residual_sample_points();
  report.samples = static_cast<int>(samples.size());
  for (const Complex lambda : samples) {
    const G2Point w = g2_origin_geodesic(params, lambda);
    report.max_e_value = std::max(report.max_e_value, g2_membership(w).max_root_modulus);
    report.left_inverse_residual =
        std::max(report.left_inverse_residual, std::abs(g2_f(params.omega, w) - lambda));
  }
  report.verdict = verdict_for(report.max_e_value, report.left_inverse_residual, tol);
  return report;
}

std::optional<Complex> find_g2_window_violation(double C, Complex omega, int radii, int angles) {
  for (int i = 1; i <= radii; ++i) {
    const double r = 0.999 * i / radii;
    for (int k = 0; k < angles; ++k) {
      const Complex lambda = std::polar(r, 2.0 * std::numbers::pi * k / angles);
      const G2Point w = g2_origin_geodesic(C, omega, lambda);
      if (!w.allFinite() || g2_membership(w).location != Location::Interior) return lambda;
    }
  }
  return std::nullopt;
}

}  // namespace tetra
