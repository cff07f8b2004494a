#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tetra {

using Complex = std::complex<double>;

/// Slack allowed on |value| <= 1 for closed-disc quantities.
inline constexpr double kClosureTol = 1e-12;

/// An argument fell outside the domain of a function (|lambda| >= 1, a pole, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a rational function is evaluated too close to a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not produce a well-defined answer (rank loss, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Distance on the unit disc reported on both scales.
///
/// `m_scale` is the Moebius pseudodistance |(a-b)/(1-conj(a)b)| in [0,1) and
/// `p_scale = artanh(m_scale)` is the Poincare distance (no factor 1/2).
struct HyperbolicDistance {
  double m_scale = 0.0;
  double p_scale = 0.0;

  static HyperbolicDistance from_m(double m) { return {m, std::atanh(m)}; }
  static HyperbolicDistance from_p(double p) { return {std::tanh(p), p}; }
};

/// Moebius quotient (a - b) / (1 - conj(a) b) without domain checks.
template <typename Scalar>
std::complex<Scalar> mobius_quotient(const std::complex<Scalar>& a, const std::complex<Scalar>& b) {
  return (a - b) / (Scalar(1) - std::conj(a) * b);
}

/// Moebius pseudodistance without domain checks.
template <typename Scalar>
Scalar mobius_m(const std::complex<Scalar>& a, const std::complex<Scalar>& b) {
  return std::abs(mobius_quotient(a, b));
}

/// Throws DomainError unless |value| < 1.
void require_open_disc(Complex value, const char* what);

/// Throws DomainError unless ||value| - 1| <= tol.
void require_unimodular(Complex value, const char* what, double tol = 1e-12);

HyperbolicDistance mobius_distance(Complex lambda1, Complex lambda2);

/// Finite Blaschke product with a real scale, post-composed with a disc automorphism:
///
///     x(lambda)   = scale * unimodular * prod_j (lambda - a_j) / (1 - conj(a_j) lambda)
///     map(lambda) = (x + shift) / (1 + conj(shift) x)
///
/// With `shift = 0` this is the plain scaled product t*B(lambda). With no zeros the
/// map is the constant `scale * unimodular` (shifted). The shift lets maps with a
/// prescribed value at the origin, such as phi(0) = -C, be written without leaving
/// the representation.
class BlaschkeMap {
 public:
  BlaschkeMap() = default;
  BlaschkeMap(Complex unimodular, std::vector<Complex> zeros, double scale = 1.0,
              Complex shift = Complex(0.0, 0.0));

  static BlaschkeMap identity();
  static BlaschkeMap constant(Complex value);
  /// lambda -> omega (lambda - a) / (1 - conj(a) lambda).
  static BlaschkeMap automorphism(Complex a, Complex omega);

  Complex operator()(Complex lambda) const;
  Complex derivative(Complex lambda) const;

  /// One zero, unit scale: a disc automorphism.
  bool is_automorphism() const;
  bool is_constant() const { return zeros_.empty(); }

  /// Inverse map; only defined for automorphisms.
  Complex inverse(Complex value) const;

  Complex unimodular() const { return unimodular_; }
  const std::vector<Complex>& zeros() const { return zeros_; }
  double scale() const { return scale_; }
  Complex shift() const { return shift_; }
  std::size_t degree() const { return zeros_.size(); }

 private:
  Complex inner(Complex lambda) const;

  Complex unimodular_{1.0, 0.0};
  std::vector<Complex> zeros_;
  double scale_ = 1.0;
  Complex shift_{0.0, 0.0};
};

/// lambda -> omega (lambda - a) / (1 - conj(a) lambda); requires |a| < 1, |omega| = 1.
BlaschkeMap disc_automorphism(Complex a, Complex omega);

/// Evaluates `map` at an open-disc point.
Complex blaschke_eval(const BlaschkeMap& map, Complex lambda);

/// Schwarz-Pick contraction test m(g(l1), g(l2)) <= m(l1, l2) + 1e-12.
bool schwarz_pick_check(const std::function<Complex(Complex)>& g, Complex lambda1,
                        Complex lambda2);

}  // namespace tetra
