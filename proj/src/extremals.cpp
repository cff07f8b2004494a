#include "tetra/extremals.hpp"

#include <algorithm>
#include <cmath>

namespace tetra {

namespace {

constexpr double kPoleGuard = 1e-14;

Complex checked_quotient(Complex num, Complex den, const char* what) {
  if (std::abs(den) < kPoleGuard) throw PoleError(std::string(what) + ": evaluation at a pole");
  return num / den;
}

}  // namespace

Complex psi_eta(Complex eta, const TetraPoint& z) {
  if (std::abs(eta) > 1.0 + kClosureTol) throw DomainError("psi_eta requires |eta| <= 1");
  return checked_quotient(eta * z(2) - z(1), eta * z(0) - 1.0, "psi_eta");
}

Eigen::Vector3cd psi_eta_gradient(Complex eta, const TetraPoint& z) {
  const Complex den = eta * z(0) - 1.0;
  if (std::abs(den) < kPoleGuard) throw PoleError("psi_eta_gradient: evaluation at a pole");
  const Complex num = eta * z(2) - z(1);
  return {-eta * num / (den * den), -1.0 / den, eta / den};
}

TetraPoint sigma(const TetraPoint& z) { return TetraPoint(z(1), z(0), z(2)); }

TetraPoint f_omega_automorphism(Complex omega, const TetraPoint& z) {
  require_unimodular(omega, "omega");
  return TetraPoint(omega * z(0), z(1), omega * z(2));
}

Complex magic_f(const TetraPoint& z) {
  const Complex d = 1.0 + z(2) - z(0) * z(1);
  if (!(d.real() > 0.0)) throw DomainError("magic_f: 1 + z3 - z1 z2 is off the right half-plane");
  return z(1) / std::sqrt(d);
}

Eigen::Vector3cd magic_f_gradient(const TetraPoint& z) {
  const Complex d = 1.0 + z(2) - z(0) * z(1);
  if (!(d.real() > 0.0)) throw DomainError("magic_f: 1 + z3 - z1 z2 is off the right half-plane");
  const Complex root = std::sqrt(d);
  const Complex d32 = d * root;
  return {z(1) * z(1) / (2.0 * d32), 1.0 / root + z(0) * z(1) / (2.0 * d32),
          -z(1) / (2.0 * d32)};
}

Complex g2_f(Complex omega, const G2Point& w) {
  require_unimodular(omega, "omega");
  return checked_quotient(2.0 * omega * w(1) - w(0), 2.0 - omega * w(0), "g2_f");
}

Eigen::Vector2cd g2_f_gradient(Complex omega, const G2Point& w) {
  const Complex den = 2.0 - omega * w(0);
  if (std::abs(den) < kPoleGuard) throw PoleError("g2_f_gradient: evaluation at a pole");
  return {(-2.0 + 2.0 * omega * omega * w(1)) / (den * den), 2.0 * omega / den};
}

HyperbolicDistance p_e(const TetraPoint& w, const TetraPoint& z, AngleGrid grid) {
  if (!is_interior(w) || !is_interior(z)) throw PreconditionError("p_e requires interior points");
  const TetraPoint sw = sigma(w);
  const TetraPoint sz = sigma(z);
  const auto plain = [&](double t) {
    const Complex omega = std::polar(1.0, t);
    return mobius_m(psi_eta(omega, w), psi_eta(omega, z));
  };
  const auto swapped = [&](double t) {
    const Complex omega = std::polar(1.0, t);
    return mobius_m(psi_eta(omega, sw), psi_eta(omega, sz));
  };
  const double m =
      std::max(maximize_on_circle(plain, grid).value, maximize_on_circle(swapped, grid).value);
  return HyperbolicDistance::from_m(m);
}

std::string_view family_name(ExtremalFamily tag) {
  switch (tag) {
    case ExtremalFamily::PsiOmega:
      return "psi_omega";
    case ExtremalFamily::PsiOmegaSigma:
      return "psi_omega_sigma";
    case ExtremalFamily::MagicF:
      return "magic_f";
    case ExtremalFamily::G2FOmega:
      return "g2_f_omega";
  }
  return "unknown";
}

std::optional<ExtremalFamily> parse_family(std::string_view name) {
  for (auto tag : {ExtremalFamily::PsiOmega, ExtremalFamily::PsiOmegaSigma, ExtremalFamily::MagicF,
                   ExtremalFamily::G2FOmega}) {
    if (family_name(tag) == name) return tag;
  }
  return std::nullopt;
}

const ExtremalRegistry& ExtremalRegistry::builtin() {
  static const ExtremalRegistry registry = [] {
    ExtremalRegistry r;
    r.add({"psi_omega", true, [](Complex omega, const TetraPoint& z) { return psi_eta(omega, z); }});
    r.add({"psi_omega_sigma", true,
           [](Complex omega, const TetraPoint& z) { return psi_eta(omega, sigma(z)); }});
    r.add({"magic_f", false, [](Complex, const TetraPoint& z) { return magic_f(z); }});
    return r;
  }();
  return registry;
}

void ExtremalRegistry::add(ExtremalFunction function) {
  if (contains(function.name)) {
    throw PreconditionError("extremal family already registered: " + function.name);
  }
  functions_.push_back(std::move(function));
}

bool ExtremalRegistry::contains(std::string_view name) const {
  return std::any_of(functions_.begin(), functions_.end(),
                     [&](const ExtremalFunction& f) { return f.name == name; });
}

const ExtremalFunction& ExtremalRegistry::find(std::string_view name) const {
  for (const auto& f : functions_) {
    if (f.name == name) return f;
  }
  throw PreconditionError("unknown extremal family: " + std::string(name));
}

std::vector<std::string> ExtremalRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& f : functions_) out.push_back(f.name);
  return out;
}

namespace {

LowerBound evaluate_family(const ExtremalFunction& family, const TetraPoint& w,
                           const TetraPoint& z, std::optional<Complex> fixed_omega,
                           AngleGrid grid) {
  if (!family.rotating || fixed_omega) {
    const Complex omega = fixed_omega.value_or(Complex(1.0, 0.0));
    const double m = mobius_m(family.evaluate(omega, w), family.evaluate(omega, z));
    return {HyperbolicDistance::from_m(m), family.name,
            family.rotating ? std::optional<Complex>(omega) : std::nullopt};
  }
  const auto objective = [&](double t) {
    const Complex omega = std::polar(1.0, t);
    return mobius_m(family.evaluate(omega, w), family.evaluate(omega, z));
  };
  const CircleMaximum best = maximize_on_circle(objective, grid);
  return {HyperbolicDistance::from_m(best.value), family.name, std::polar(1.0, best.angle)};
}

}  // namespace

LowerBound caratheodory_lower_bound(const TetraPoint& w, const TetraPoint& z,
                                    std::span<const ExtremalFamilyId> families, AngleGrid grid) {
  if (families.empty()) throw PreconditionError("at least one extremal family is required");
  if (!is_interior(w) || !is_interior(z)) {
    throw PreconditionError("caratheodory_lower_bound requires interior points");
  }
  const auto& registry = ExtremalRegistry::builtin();
  LowerBound best{HyperbolicDistance::from_m(0.0), "", std::nullopt};
  bool first = true;
  for (const auto& id : families) {
    if (id.tag == ExtremalFamily::G2FOmega) {
      throw PreconditionError("g2_f_omega is a family on the symmetrized bidisc");
    }
    if (id.omega) require_unimodular(*id.omega, "family omega");
    const LowerBound candidate =
        evaluate_family(registry.find(family_name(id.tag)), w, z, id.omega, grid);
    if (first || candidate.distance.m_scale > best.distance.m_scale) best = candidate;
    first = false;
  }
  return best;
}

LowerBound caratheodory_lower_bound(const TetraPoint& w, const TetraPoint& z,
                                    std::span<const std::string> families,
                                    const ExtremalRegistry& registry, AngleGrid grid) {
  if (families.empty()) throw PreconditionError("at least one extremal family is required");
  if (!is_interior(w) || !is_interior(z)) {
    throw PreconditionError("caratheodory_lower_bound requires interior points");
  }
  LowerBound best{HyperbolicDistance::from_m(0.0), "", std::nullopt};
  bool first = true;
  for (const auto& name : families) {
    const LowerBound candidate = evaluate_family(registry.find(name), w, z, std::nullopt, grid);
    if (first || candidate.distance.m_scale > best.distance.m_scale) best = candidate;
    first = false;
  }
  return best;
}

LowerBound g2_caratheodory_lower_bound(const G2Point& w, const G2Point& z, AngleGrid grid) {
  if (g2_membership(w).location != Location::Interior ||
      g2_membership(z).location != Location::Interior) {
    throw PreconditionError("g2_caratheodory_lower_bound requires interior points");
  }
  const auto objective = [&](double t) {
    const Complex omega = std::polar(1.0, t);
    return mobius_m(g2_f(omega, w), g2_f(omega, z));
  };
  const CircleMaximum best = maximize_on_circle(objective, grid);
  return {HyperbolicDistance::from_m(best.value), std::string(family_name(ExtremalFamily::G2FOmega)),
          std::polar(1.0, best.angle)};
}

}  // namespace tetra
