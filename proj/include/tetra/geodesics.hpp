#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "tetra/domains.hpp"
#include "tetra/hyperbolic.hpp"

namespace tetra {

using TetraDisc = std::function<TetraPoint(Complex)>;
using G2Disc = std::function<G2Point(Complex)>;

/// Parameters of a tetrablock geodesic through the origin,
///
///     f(l) = (w1 (phi + C)/(1 + C), w2 l (1 + C phi)/(1 + C), w1 w2 l phi),
///
/// optionally followed by the swap of the first two coordinates.
struct OriginGeodesicParams {
  double C = 0.0;
  Complex omega1{1.0, 0.0};
  Complex omega2{1.0, 0.0};
  BlaschkeMap phi = BlaschkeMap::identity();
  bool swapped = false;

  /// Throws PreconditionError when C, the rotations or phi(0) = -C fail.
  void validate() const;
};

/// Disc (w1 (phi + C)/(1 + C), w2 psi (1 + C phi)/(1 + C), w1 w2 phi psi)
/// with C in [0, 1) and phi, psi self-maps of the disc.
struct GeneralDiscParams {
  double C = 0.0;
  Complex omega1{1.0, 0.0};
  Complex omega2{1.0, 0.0};
  BlaschkeMap phi = BlaschkeMap::identity();
  BlaschkeMap psi = BlaschkeMap::identity();

  void validate() const;
};

/// Symmetrized-bidisc geodesic through the origin with parameter C in [1, 2].
struct G2GeodesicParams {
  double C = 1.0;
  Complex omega{1.0, 0.0};

  void validate() const;
};

enum class DiscVerdict { GeodesicVerified, InDomainOnly, Failed };
std::string_view to_string(DiscVerdict verdict);

struct DiscVerificationReport {
  double max_e_value = 0.0;
  double left_inverse_residual = 0.0;
  int samples = 0;
  DiscVerdict verdict = DiscVerdict::Failed;
};

/// phi(l) = (l g(l) - C) / (1 - C l g(l)) with g = scale * unimodular * prod M_b: the
/// general self-map with phi(0) = -C, as a BlaschkeMap. C = 1 yields phi = -1.
BlaschkeMap phi_through(double C, double scale = 1.0, Complex unimodular = {1.0, 0.0},
                        std::vector<Complex> extra_zeros = {});

TetraPoint eval_origin_geodesic(const OriginGeodesicParams& params, Complex lambda);
TetraPoint eval_general_disc(const GeneralDiscParams& params, Complex lambda);

/// (w1 (phi + C)/(1 + C), w2 (1 + C phi)/(1 + C), w1 w2 phi); lies in the boundary.
TetraPoint eval_boundary_disc(double C, Complex omega1, Complex omega2, const BlaschkeMap& phi,
                              Complex lambda);

/// conj(w2) * Psi_{conj(w1)} (after undoing the swap): the left inverse of the geodesic.
Complex origin_geodesic_certificate(const OriginGeodesicParams& params, const TetraPoint& z);

/// Radii {0.1, ..., 0.9} times `roots` roots of unity.
std::vector<Complex> residual_sample_points(int roots = 16);

/// max over the sample pattern of |F(f(l)) - l|.
template <typename Point>
double left_inverse_residual(const std::function<Point(Complex)>& disc,
                             const std::function<Complex(const Point&)>& left_inverse,
                             int roots = 16) {
  double worst = 0.0;
  for (const Complex lambda : residual_sample_points(roots)) {
    worst = std::max(worst, std::abs(left_inverse(disc(lambda)) - lambda));
  }
  return worst;
}

DiscVerificationReport verify_origin_geodesic(const OriginGeodesicParams& params,
                                              double tol = 1e-10);
/// Verified as a geodesic only when psi is an automorphism.
DiscVerificationReport verify_general_disc(const GeneralDiscParams& params, double tol = 1e-10);

/// h(l) / l for h holomorphic with h(0) = 0; near 0 the value comes from the mean of
/// h(z)/z over a circle of radius 1e-5 (64-point trapezoid).
Complex removable_quotient(const std::function<Complex(Complex)>& h, Complex lambda);

/// (f1/l, f2, f3/l); requires f1(0) = f3(0) = 0.
TetraDisc transport_disc(TetraDisc disc);

enum class DiscClassification { AllInterior, AllBoundary, Mixed };
std::string_view to_string(DiscClassification classification);

DiscClassification classify_disc(const TetraDisc& disc, const std::vector<Complex>& samples,
                                 double tol = 1e-8);

/// (w1 (phi + C)/(l (1 + C)), w2 l (1 + C phi)/(1 + C), w1 w2 phi) for C in (0, 1) and
/// phi(0) = -C not an automorphism.
TetraPoint cor43_extremal(double C, Complex omega1, Complex omega2, const BlaschkeMap& phi,
                          Complex lambda);

/// Lempert function between (0, 0, w) and (0, z, w): m = |z| / (1 - |w|).
HyperbolicDistance lempert_special(Complex z, Complex w);

struct ProductDiscSample {
  TetraPoint point;
  /// One of a, b is an automorphism, so the disc is a complex geodesic.
  bool geodesic = false;
};

/// l -> (a(l), b(l), a(l) b(l)).
ProductDiscSample product_disc(const BlaschkeMap& a, const BlaschkeMap& b, Complex lambda);

/// (2(2 - C) l / (w l (1 - C) - 1), l (l - conj(w)(1 - C)) / (1 - l w (1 - C))). Evaluated
/// for any real C; only C in [1, 2] gives a disc in the symmetrized bidisc.
G2Point g2_origin_geodesic(double C, Complex omega, Complex lambda);
G2Point g2_origin_geodesic(const G2GeodesicParams& params, Complex lambda);

DiscVerificationReport verify_g2_geodesic(const G2GeodesicParams& params, double tol = 1e-10);

/// Grid search for l in the disc with g2_origin_geodesic(C, omega, l) outside the
/// symmetrized bidisc.
std::optional<Complex> find_g2_window_violation(double C, Complex omega, int radii = 200,
                                                int angles = 64);

}  // namespace tetra
