#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tetra/angle_search.hpp"
#include "tetra/domains.hpp"
#include "tetra/hyperbolic.hpp"

namespace tetra {

/// Psi_eta(z) = (eta z3 - z2) / (eta z1 - 1) for |eta| <= 1.
Complex psi_eta(Complex eta, const TetraPoint& z);
Eigen::Vector3cd psi_eta_gradient(Complex eta, const TetraPoint& z);

/// (z1, z2, z3) -> (z2, z1, z3).
TetraPoint sigma(const TetraPoint& z);

/// (z1, z2, z3) -> (omega z1, z2, omega z3), |omega| = 1.
TetraPoint f_omega_automorphism(Complex omega, const TetraPoint& z);

/// z2 / sqrt(1 + z3 - z1 z2) on the principal branch. Throws DomainError when
/// Re(1 + z3 - z1 z2) <= 0, which cannot happen on the tetrablock.
Complex magic_f(const TetraPoint& z);
Eigen::Vector3cd magic_f_gradient(const TetraPoint& z);

/// (2 omega p - s) / (2 - omega s): the left inverse of the symmetrized-bidisc
/// geodesics through the origin.
Complex g2_f(Complex omega, const G2Point& w);
Eigen::Vector2cd g2_f_gradient(Complex omega, const G2Point& w);

/// sup over |omega| = 1 of the Moebius distances between Psi_omega(w), Psi_omega(z)
/// and between Psi_omega(sigma w), Psi_omega(sigma z). Always <= c_E(w, z).
HyperbolicDistance p_e(const TetraPoint& w, const TetraPoint& z, AngleGrid grid = {});

enum class ExtremalFamily { PsiOmega, PsiOmegaSigma, MagicF, G2FOmega };

struct ExtremalFamilyId {
  ExtremalFamily tag = ExtremalFamily::PsiOmega;
  /// When set, only this member of a rotating family is used.
  std::optional<Complex> omega;
};

std::string_view family_name(ExtremalFamily tag);
std::optional<ExtremalFamily> parse_family(std::string_view name);

/// A family of holomorphic maps from the tetrablock into the unit disc. Rotating
/// families are indexed by a unimodular parameter that the lower bound optimizes.
struct ExtremalFunction {
  std::string name;
  bool rotating = false;
  std::function<Complex(Complex omega, const TetraPoint& z)> evaluate;
};

class ExtremalRegistry {
 public:
  /// psi_omega, psi_omega_sigma and magic_f.
  static const ExtremalRegistry& builtin();

  void add(ExtremalFunction function);
  const ExtremalFunction& find(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::vector<ExtremalFunction> functions_;
};

struct LowerBound {
  HyperbolicDistance distance;
  std::string family;
  std::optional<Complex> omega;
};

/// max over the given families (and over omega for rotating ones) of
/// m(F(w), F(z)); a lower bound for the Caratheodory distance in m-scale.
LowerBound caratheodory_lower_bound(const TetraPoint& w, const TetraPoint& z,
                                    std::span<const ExtremalFamilyId> families,
                                    AngleGrid grid = {});

/// Same, selecting families by registry name.
LowerBound caratheodory_lower_bound(const TetraPoint& w, const TetraPoint& z,
                                    std::span<const std::string> families,
                                    const ExtremalRegistry& registry = ExtremalRegistry::builtin(),
                                    AngleGrid grid = {});

/// sup over omega of m(g2_f(omega, w), g2_f(omega, z)).
LowerBound g2_caratheodory_lower_bound(const G2Point& w, const G2Point& z, AngleGrid grid = {});

}  // namespace tetra
