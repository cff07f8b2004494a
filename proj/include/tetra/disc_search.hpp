#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tetra/geodesics.hpp"

namespace tetra {

/// A finite-dimensional family of analytic discs into the closed tetrablock. Every
/// real parameter vector of length `dimension` is admissible.
struct DiscFamily {
  std::string name;
  int dimension = 0;
  std::function<TetraPoint(std::span<const double> params, Complex lambda)> eval;
  /// Closed under precomposition with disc automorphisms; the search then fixes
  /// the nodes at 0 and t in [0, 1).
  bool automorphism_invariant = false;
};

/// General discs with phi, psi shifted scaled Blaschke products of degree <= `degree`.
DiscFamily general_disc_family(int degree = 2);
/// (a, b, ab) with a, b shifted scaled Blaschke products of degree <= `degree`.
DiscFamily product_disc_family(int degree = 1);
/// Origin geodesics with phi = (l g - C)/(1 - C l g), g of degree <= `inner_degree`.
/// Both interpolation nodes are free, so Moebius reparameterizations are covered.
DiscFamily origin_geodesic_family(int inner_degree = 1);
/// Transported origin geodesics (f1/l, f2, f3/l) with the same phi parameterization.
DiscFamily transported_family(int inner_degree = 1);

/// Origin geodesic, transported, product and general families, in that order.
std::vector<DiscFamily> default_search_families();

struct SearchBudget {
  /// Residual evaluations. Each family and orientation gets an equal share; unused
  /// budget carries over to later runs.
  long evaluations = 100000;
  std::uint64_t seed = 0;
  int max_starts_per_family = 8;
};

struct UpperBoundResult {
  /// Unset when no family produced an interpolant within tolerance.
  std::optional<HyperbolicDistance> bound;
  std::string family;
  /// The disc is the family member composed with the swap of z1 and z2.
  bool swapped = false;
  Complex lambda1{0.0, 0.0};
  Complex lambda2{0.0, 0.0};
  std::vector<double> params;
  double residual = 0.0;
  long evaluations = 0;
};

/// Interpolation residual accepted by the disc searches.
inline constexpr double kInterpolationTol = 1e-9;

/// Smallest m(l1, l2) found over the families with f(l1) = w, f(l2) = z; an upper bound
/// for the Lempert function in m-scale. Each start first interpolates with the node
/// distance t = m(l1, l2) free, then walks t down with warm-started fixed-t solves
/// while the interpolation residual stays below 1e-12. Starts are deterministic given
/// the seed. Each family is also run on (sigma w, sigma z), which composes its discs
/// with the swap.
UpperBoundResult disc_search_upper_bound(const TetraPoint& w, const TetraPoint& z,
                                         std::span<const DiscFamily> families,
                                         const SearchBudget& budget = {});
UpperBoundResult disc_search_upper_bound(const TetraPoint& w, const TetraPoint& z,
                                         const SearchBudget& budget = {});

struct GeodesicSolveResult {
  std::optional<OriginGeodesicParams> params;
  /// |f(lambda0) - z| for the returned parameters, or the best residual reached.
  double residual = 0.0;
  int degree = -1;
  long evaluations = 0;
};

/// Searches the origin-geodesic family (and its swapped copy) for f(lambda0) = z,
/// trying phi of degree 0, 1, ..., max_degree in turn; the first degree that succeeds
/// wins, then the smallest C. Success means residual < 1e-8.
GeodesicSolveResult solve_origin_geodesic_through(const TetraPoint& z, Complex lambda0,
                                                  int max_degree = 2,
                                                  const SearchBudget& budget = {});

}  // namespace tetra
