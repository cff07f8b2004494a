#include "tetra/hyperbolic.hpp"

#include <sstream>

namespace tetra {

namespace {

Complex mobius_factor(Complex a, Complex lambda) {
  return (lambda - a) / (1.0 - std::conj(a) * lambda);
}

Complex mobius_factor_derivative(Complex a, Complex lambda) {
  const Complex d = 1.0 - std::conj(a) * lambda;
  return (1.0 - std::norm(a)) / (d * d);
}

std::string describe(const char* what, Complex value) {
  std::ostringstream os;
  os << what << " = " << value << " (modulus " << std::abs(value) << ")";
  return os.str();
}

}  // namespace

void require_open_disc(Complex value, const char* what) {
  if (!(std::abs(value) < 1.0)) {
    throw DomainError(describe(what, value) + " must lie in the open unit disc");
  }
}

void require_unimodular(Complex value, const char* what, double tol) {
  if (!(std::abs(std::abs(value) - 1.0) <= tol)) {
    throw DomainError(describe(what, value) + " must be unimodular");
  }
}

HyperbolicDistance mobius_distance(Complex lambda1, Complex lambda2) {
  require_open_disc(lambda1, "lambda1");
  require_open_disc(lambda2, "lambda2");
  return HyperbolicDistance::from_m(mobius_m(lambda1, lambda2));
}

BlaschkeMap::BlaschkeMap(Complex unimodular, std::vector<Complex> zeros, double scale,
                         Complex shift)
    : unimodular_(unimodular), zeros_(std::move(zeros)), scale_(scale), shift_(shift) {
  require_unimodular(unimodular_, "unimodular factor", 1e-10);
  for (const auto& a : zeros_) require_open_disc(a, "Blaschke zero");
  if (!(scale_ >= 0.0 && scale_ <= 1.0 + kClosureTol)) {
    throw DomainError("Blaschke scale must lie in [0, 1]");
  }
  if (!(std::abs(shift_) < 1.0)) throw DomainError("Blaschke shift must lie in the open disc");
}

BlaschkeMap BlaschkeMap::identity() { return BlaschkeMap({1.0, 0.0}, {Complex(0.0, 0.0)}); }

BlaschkeMap BlaschkeMap::constant(Complex value) {
  const double r = std::abs(value);
  if (r > 1.0 + kClosureTol) throw DomainError(describe("constant map value", value));
  const Complex u = r > 0.0 ? value / r : Complex(1.0, 0.0);
  return BlaschkeMap(u, {}, std::min(r, 1.0));
}

BlaschkeMap BlaschkeMap::automorphism(Complex a, Complex omega) {
  require_open_disc(a, "automorphism zero");
  require_unimodular(omega, "automorphism rotation");
  return BlaschkeMap(omega, {a});
}

Complex BlaschkeMap::inner(Complex lambda) const {
  Complex x = scale_ * unimodular_;
  for (const auto& a : zeros_) x *= mobius_factor(a, lambda);
  return x;
}

Complex BlaschkeMap::operator()(Complex lambda) const {
  const Complex x = inner(lambda);
  if (shift_ == Complex(0.0, 0.0)) return x;
  return (x + shift_) / (1.0 + std::conj(shift_) * x);
}

Complex BlaschkeMap::derivative(Complex lambda) const {
  Complex dx(0.0, 0.0);
  for (std::size_t j = 0; j < zeros_.size(); ++j) {
    Complex term = mobius_factor_derivative(zeros_[j], lambda);
    for (std::size_t k = 0; k < zeros_.size(); ++k) {
      if (k != j) term *= mobius_factor(zeros_[k], lambda);
    }
    dx += term;
  }
  dx *= scale_ * unimodular_;
  if (shift_ == Complex(0.0, 0.0)) return dx;
  const Complex d = 1.0 + std::conj(shift_) * inner(lambda);
  return dx * (1.0 - std::norm(shift_)) / (d * d);
}

bool BlaschkeMap::is_automorphism() const {
  return zeros_.size() == 1 && std::abs(scale_ - 1.0) <= kClosureTol;
}

Complex BlaschkeMap::inverse(Complex value) const {
  if (!is_automorphism()) throw PreconditionError("only automorphisms are invertible");
  const Complex x = (value - shift_) / (1.0 - std::conj(shift_) * value);
  const Complex y = x / unimodular_;
  const Complex a = zeros_.front();
  return (y + a) / (1.0 + std::conj(a) * y);
}

BlaschkeMap disc_automorphism(Complex a, Complex omega) {
  return BlaschkeMap::automorphism(a, omega);
}

Complex blaschke_eval(const BlaschkeMap& map, Complex lambda) {
  require_open_disc(lambda, "lambda");
  return map(lambda);
}

bool schwarz_pick_check(const std::function<Complex(Complex)>& g, Complex lambda1,
                        Complex lambda2) {
  return mobius_m(g(lambda1), g(lambda2)) <= mobius_m(lambda1, lambda2) + 1e-12;
}

}  // namespace tetra
