#pragma once

// Random generators and independent oracles shared by the test binaries.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "tetra/domains.hpp"
#include "tetra/geodesics.hpp"
#include "tetra/hyperbolic.hpp"

namespace tetra::testing {

inline Complex random_disc_point(std::mt19937_64& rng, double max_radius = 0.95) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = max_radius * std::sqrt(u(rng));
  return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

inline Complex random_unimodular(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, u(rng));
}

inline double random_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Constant, or Blaschke of degree 1-2 with scale in (0, 1] and a random shift.
inline BlaschkeMap random_self_map(std::mt19937_64& rng, int max_degree = 2) {
  const int degree = std::uniform_int_distribution<int>(0, max_degree)(rng);
  if (degree == 0) return BlaschkeMap::constant(random_disc_point(rng));
  std::vector<Complex> zeros;
  for (int k = 0; k < degree; ++k) zeros.push_back(random_disc_point(rng));
  return BlaschkeMap(random_unimodular(rng), zeros, random_uniform(rng, 0.05, 1.0),
                     random_disc_point(rng, 0.9));
}

/// phi with phi(0) = -C: constant, automorphism, or degree 2, scale in (0, 1].
inline OriginGeodesicParams random_origin_params(std::mt19937_64& rng) {
  OriginGeodesicParams p;
  p.C = random_uniform(rng, 0.0, 1.0);
  p.omega1 = random_unimodular(rng);
  p.omega2 = random_unimodular(rng);
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      p.phi = BlaschkeMap::constant(-p.C);
      break;
    case 1:
      p.phi = phi_through(p.C, 1.0, random_unimodular(rng));
      break;
    default:
      p.phi = phi_through(p.C, random_uniform(rng, 0.1, 1.0), random_unimodular(rng),
                          {random_disc_point(rng, 0.9)});
  }
  return p;
}

/// Tetrablock point from an origin geodesic; always interior.
inline TetraPoint random_interior_point(std::mt19937_64& rng) {
  return eval_origin_geodesic(random_origin_params(rng), random_disc_point(rng, 0.9));
}

/// Dense brute-force maximum of a function of the angle (no refinement).
template <typename F>
double brute_max_on_circle(F&& f, int samples = 200000) {
  double best = 0.0;
  for (int k = 0; k < samples; ++k) {
    best = std::max(best, f(2.0 * std::numbers::pi * k / samples));
  }
  return best;
}

/// |(a - b) / (1 - conj(a) b)| written out in real arithmetic.
inline double hand_mobius(Complex a, Complex b) {
  const double nr = a.real() - b.real();
  const double ni = a.imag() - b.imag();
  const double dr = 1.0 - (a.real() * b.real() + a.imag() * b.imag());
  const double di = -(a.real() * b.imag() - a.imag() * b.real());
  return std::sqrt((nr * nr + ni * ni) / (dr * dr + di * di));
}

}  // namespace tetra::testing
