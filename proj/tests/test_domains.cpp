#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tetra/domains.hpp"
#include "tetra/extremals.hpp"

using namespace tetra;
using tetra::testing::random_disc_point;
using tetra::testing::random_interior_point;
using tetra::testing::random_uniform;
using tetra::testing::random_unimodular;

namespace {

// Brute-force sup of |Psi_eta(z)| over a dense set of unimodular eta.
double brute_psi_sup(const TetraPoint& z) {
  return tetra::testing::brute_max_on_circle(
      [&](double t) {
        const Complex eta = std::polar(1.0, t);
        return std::abs((eta * z(2) - z(1)) / (eta * z(0) - 1.0));
      },
      100000);
}

// Scaled membership in terms of the e-value alone, bisected independently.
double brute_rho(const TetraPoint& z) {
  double lo = 0.0;
  double hi = 64.0;
  for (int k = 0; k < 200; ++k) {
    const double t = 0.5 * (lo + hi);
    const TetraPoint s(z(0) / t, z(1) / t, z(2) / (t * t));
    (tetra_e_value(s) < 1.0 ? hi : lo) = t;
  }
  return hi;
}

TetraPoint random_cube_point(std::mt19937_64& rng) {
  TetraPoint z;
  for (int j = 0; j < 3; ++j) {
    z(j) = Complex(random_uniform(rng, -1.0, 1.0), random_uniform(rng, -1.0, 1.0));
  }
  // Into the unit polydisc.
  for (int j = 0; j < 3; ++j) z(j) /= std::sqrt(2.0) * (1.0 + 1e-9);
  return z;
}

}  // namespace

TEST_CASE("tetra_e_value examples") {
  CHECK(tetra_e_value(TetraPoint(0.0, 0.0, 0.0)) == 0.0);
  // |0 - 0.3 * 0.5| + |0.3 - 0| + 0.25.
  CHECK(std::abs(tetra_e_value(TetraPoint(0.0, 0.3, 0.5)) - 0.7) < 1e-15);
  // Boundary disc value with phi = 0.2, C = 0.5.
  CHECK(std::abs(tetra_e_value(TetraPoint(0.7 / 1.5, 1.1 / 1.5, 0.2)) - 1.0) < 1e-15);
}

TEST_CASE("tetra_membership examples") {
  CHECK(tetra_membership(TetraPoint(0.0, 0.0, 0.0)).location == Location::Interior);
  CHECK(tetra_membership(TetraPoint(0.0, 0.4, Complex(0.0, 0.55))).location == Location::Interior);
  CHECK(tetra_membership(TetraPoint(0.0, 0.4, Complex(0.0, 0.65))).location == Location::Exterior);
  const auto edge = tetra_membership(TetraPoint(1.0, 0.0, 0.0));
  CHECK(edge.location == Location::Boundary);
  CHECK(edge.e_value == 1.0);
  CHECK(edge.tolerance_used == kBoundaryTol);
  CHECK(tetra_membership(TetraPoint(0.0, 0.3, 0.0), 1e-10, true).psi_sup.has_value());
  CHECK_FALSE(tetra_membership(TetraPoint(1.0, 0.0, 0.0), 1e-10, true).psi_sup.has_value());
  CHECK(to_string(Location::Boundary) == "boundary");
}

TEST_CASE("the slice {z1 = 0} is {|z2| + |z3| < 1}") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 2000; ++k) {
    const Complex z = random_disc_point(rng, 1.0);
    const Complex w = random_disc_point(rng, 1.0);
    const double s = std::abs(z) + std::abs(w);
    if (std::abs(s - 1.0) < 1e-9) continue;
    CHECK((tetra_membership(TetraPoint(0.0, z, w)).location == Location::Interior) == (s < 1.0));
  }
}

TEST_CASE("psi_sup examples") {
  CHECK(std::abs(psi_sup(TetraPoint(0.0, 0.3, 0.0)) - 0.3) < 1e-15);
  CHECK(psi_sup(TetraPoint(0.0, 0.0, 0.0)) == 0.0);
  const TetraPoint edge(0.5, 0.5, 0.25);
  CHECK(std::abs(tetra_e_value(edge) - 0.8125) < 1e-15);
  CHECK(psi_sup(edge) < 1.0);
  CHECK(psi_sup(edge * (1.0 - 1e-6)) < 1.0);
  CHECK(std::abs(psi_sup(edge) - brute_psi_sup(edge)) < 1e-8);
  CHECK_THROWS_AS(psi_sup(TetraPoint(1.0, 0.0, 0.0)), PreconditionError);
}

TEST_CASE("psi_sup agrees with the dense brute force") {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 50; ++k) {
    const TetraPoint z(random_disc_point(rng, 0.9), random_disc_point(rng), random_disc_point(rng));
    const double ours = psi_sup(z);
    const double brute = brute_psi_sup(z);
    CHECK(ours >= brute - 1e-12);
    CHECK(ours <= brute + 1e-6 * (1.0 + brute));
  }
}

TEST_CASE("psi_sup and e_value classify the cube the same way") {
  std::mt19937_64 rng(23);
  int compared = 0;
  for (int k = 0; k < 10000; ++k) {
    const TetraPoint z = random_cube_point(rng);
    const double e = tetra_e_value(z);
    if (std::abs(e - 1.0) <= 1e-6) continue;
    ++compared;
    REQUIRE((psi_sup(z, {256, 30}) < 1.0) == (e < 1.0));
  }
  CHECK(compared > 9000);
}

TEST_CASE("membership is invariant under sigma and F_omega") {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 2000; ++k) {
    const TetraPoint z = random_cube_point(rng);
    const Complex omega = random_unimodular(rng);
    CHECK(tetra_e_value(sigma(z)) == tetra_e_value(z));
    CHECK(std::abs(tetra_e_value(f_omega_automorphism(omega, z)) - tetra_e_value(z)) < 1e-14);
  }
}

TEST_CASE("interior points lie in the open polydisc and off the pole set") {
  std::mt19937_64 rng(25);
  int interior = 0;
  for (int k = 0; k < 20000; ++k) {
    const TetraPoint z = random_cube_point(rng);
    if (!is_interior(z)) continue;
    ++interior;
    REQUIRE(z.cwiseAbs().maxCoeff() < 1.0);
    REQUIRE(std::abs(z(0) * z(1) - z(2)) < 1.0);
  }
  CHECK(interior > 100);
}

TEST_CASE("g2_membership examples") {
  const auto origin = g2_membership(G2Point(0.0, 0.0));
  CHECK(origin.location == Location::Interior);
  CHECK(origin.max_root_modulus == 0.0);
  const auto edge = g2_membership(G2Point(2.0, 1.0));
  CHECK(edge.location == Location::Boundary);
  CHECK(std::abs(edge.max_root_modulus - 1.0) < 1e-15);
  const auto c1 = g2_membership(G2Point(-0.8, 0.16));
  CHECK(c1.location == Location::Interior);
  // A double root is only determined to about the square root of the rounding error.
  CHECK(std::abs(c1.roots[0] - (-0.4)) < 1e-8);
  CHECK(std::abs(c1.roots[1] - (-0.4)) < 1e-8);
  CHECK(g2_membership(G2Point(0.0, -1.21)).location == Location::Exterior);
}

TEST_CASE("symmetric_roots stays accurate near double roots and for tiny roots") {
  const auto r = symmetric_roots(Complex(1.0 + 1e-9, 0.0), 0.25 * (1.0 + 1e-9));
  CHECK(std::abs(r[0] * r[1] - 0.25 * (1.0 + 1e-9)) < 1e-15);
  const auto tiny = symmetric_roots(1.0, 1e-17);
  CHECK(std::min(std::abs(tiny[0]), std::abs(tiny[1])) == doctest::Approx(1e-17).epsilon(1e-12));
}

TEST_CASE("g2 round trip from random root pairs") {
  std::mt19937_64 rng(26);
  for (int k = 0; k < 5000; ++k) {
    const Complex a = random_disc_point(rng, 1.2);
    const Complex b = random_disc_point(rng, 1.2);
    const double m = std::max(std::abs(a), std::abs(b));
    if (std::abs(m - 1.0) < 1e-8) continue;
    const auto report = g2_membership(g2_from_roots(a, b));
    CHECK((report.location == Location::Interior) == (m < 1.0));
    CHECK(std::abs(report.max_root_modulus - m) < 1e-7);
  }
}

TEST_CASE("product_embedding of the bidisc is interior") {
  std::mt19937_64 rng(27);
  for (int k = 0; k < 1000; ++k) {
    const auto z = product_embedding(random_disc_point(rng, 0.999), random_disc_point(rng, 0.999));
    CHECK(is_interior(z, 0.0));
  }
}

TEST_CASE("rho_functional examples") {
  CHECK(std::abs(rho_functional(TetraPoint(0.0, 0.5, 0.0)) - 0.5) < 1e-11);
  CHECK(rho_functional(TetraPoint(0.0, 0.0, 0.0)) == 0.0);
  const TetraPoint z(0.2, 0.1, 0.05);
  CHECK(std::abs(rho_functional(quasi_scale(z, 0.3)) - 0.3 * rho_functional(z)) < 1e-8);
  CHECK(std::abs(rho_functional(z) - brute_rho(z)) < 1e-10);
}

TEST_CASE("rho_functional handles points far outside the first bracket") {
  const TetraPoint z(0.5, 0.5, -0.25);
  CHECK(std::abs(rho_functional(z) - brute_rho(z)) < 1e-10);
  const TetraPoint far(0.0, 0.0, 50.0);
  CHECK(std::abs(rho_functional(far) - std::sqrt(50.0)) < 1e-9);
}

TEST_CASE("rho_functional is quasi-homogeneous and detects interior points") {
  std::mt19937_64 rng(28);
  for (int k = 0; k < 100; ++k) {
    const TetraPoint z = random_cube_point(rng) * 1.4;
    const double t = random_uniform(rng, 1e-3, 1.0);
    const double rho = rho_functional(z);
    CHECK(std::abs(rho_functional(quasi_scale(z, t)) - t * rho) < 1e-7);
    CHECK(std::abs(rho_functional(quasi_scale(z, std::polar(t, 1.1))) - t * rho) < 1e-7);
    if (std::abs(rho - 1.0) > 1e-9) CHECK((rho < 1.0) == is_interior(z, 0.0));
  }
}

TEST_CASE("random geodesic points are interior") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 1000; ++k) CHECK(is_interior(random_interior_point(rng)));
}
