#include "tetra/disc_search.hpp"

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <random>
#include <tuple>

#include "tetra/extremals.hpp"
#include "tetra/least_squares.hpp"

namespace tetra {

namespace {

Complex to_disc(double x, double y) { return Complex(x, y) / std::sqrt(1.0 + x * x + y * y); }

Complex unit(double angle) { return std::polar(1.0, angle); }

double closed_unit_interval(double c) {
  const double s = std::sin(c);
  return s * s;
}

Complex mobius_factor(Complex a, Complex lambda) {
  return (lambda - a) / (1.0 - std::conj(a) * lambda);
}

/// sin(p0) * e^{i p1} * prod_j M_{a_j}(l); a_j from the following pairs.
Complex scaled_product(std::span<const double> p, int zeros, Complex lambda) {
  Complex x = std::sin(p[0]) * unit(p[1]);
  for (int j = 0; j < zeros; ++j) x *= mobius_factor(to_disc(p[2 + 2 * j], p[3 + 2 * j]), lambda);
  return x;
}

int scaled_product_size(int zeros) { return 2 + 2 * zeros; }

/// scaled_product followed by the automorphism x -> (x + a)/(1 + conj(a) x).
Complex shifted_map(std::span<const double> p, int zeros, Complex lambda) {
  const Complex a = to_disc(p[0], p[1]);
  const Complex x = scaled_product(p.subspan(2), zeros, lambda);
  return (x + a) / (1.0 + std::conj(a) * x);
}

int shifted_map_size(int zeros) { return 2 + scaled_product_size(zeros); }

struct OriginParts {
  double C;
  Complex omega1;
  Complex omega2;
  Complex g;
};

OriginParts decode_origin(std::span<const double> p, int inner_degree, Complex lambda) {
  return {closed_unit_interval(p[0]), unit(p[1]), unit(p[2]),
          scaled_product(p.subspan(3), inner_degree, lambda)};
}

using Vec = Eigen::VectorXd;

void put_complex(Vec& r, Eigen::Index at, Complex v) {
  r(at) = v.real();
  r(at + 1) = v.imag();
}

}  // namespace

DiscFamily general_disc_family(int degree) {
  const int map_size = shifted_map_size(degree);
  return {"general", 3 + 2 * map_size,
          [degree, map_size](std::span<const double> p, Complex lambda) {
            const double C = closed_unit_interval(p[0]);
            const Complex omega1 = unit(p[1]);
            const Complex omega2 = unit(p[2]);
            const Complex phi = shifted_map(p.subspan(3, map_size), degree, lambda);
            const Complex psi = shifted_map(p.subspan(3 + map_size, map_size), degree, lambda);
            return TetraPoint(omega1 * (phi + C) / (1.0 + C),
                              omega2 * psi * (1.0 + C * phi) / (1.0 + C), omega1 * omega2 * phi * psi);
          },
          true};
}

DiscFamily product_disc_family(int degree) {
  const int map_size = shifted_map_size(degree);
  return {"product", 2 * map_size, [degree, map_size](std::span<const double> p, Complex lambda) {
            const Complex a = shifted_map(p.subspan(0, map_size), degree, lambda);
            const Complex b = shifted_map(p.subspan(map_size, map_size), degree, lambda);
            return TetraPoint(a, b, a * b);
          },
          true};
}

DiscFamily origin_geodesic_family(int inner_degree) {
  return {"origin_geodesic", 3 + scaled_product_size(inner_degree),
          [inner_degree](std::span<const double> p, Complex lambda) {
            const OriginParts o = decode_origin(p, inner_degree, lambda);
            const Complex x = lambda * o.g;
            const Complex d = 1.0 - o.C * x;
            return TetraPoint(o.omega1 * x * (1.0 - o.C) / d, o.omega2 * lambda * (1.0 - o.C) / d,
                              o.omega1 * o.omega2 * lambda * (x - o.C) / d);
          }};
}

DiscFamily transported_family(int inner_degree) {
  return {"transported", 3 + scaled_product_size(inner_degree),
          [inner_degree](std::span<const double> p, Complex lambda) {
            const OriginParts o = decode_origin(p, inner_degree, lambda);
            const Complex x = lambda * o.g;
            const Complex d = 1.0 - o.C * x;
            return TetraPoint(o.omega1 * o.g * (1.0 - o.C) / d, o.omega2 * lambda * (1.0 - o.C) / d,
                              o.omega1 * o.omega2 * (x - o.C) / d);
          }};
}

std::vector<DiscFamily> default_search_families() {
  return {origin_geodesic_family(1), transported_family(1), product_disc_family(1),
          general_disc_family(2)};
}

namespace {

struct Interpolant {
  double m = std::numeric_limits<double>::infinity();
  double residual = std::numeric_limits<double>::infinity();
  Complex lambda1{0.0, 0.0};
  Complex lambda2{0.0, 0.0};
  std::vector<double> params;
};

/// Node parameterization with m(l1, l2) = t held apart from the rest. Pinned families
/// use l1 = 0, l2 = t; otherwise l1 is free and l2 = (l1 + q)/(1 + conj(l1) q) with
/// q = t e^{i theta}.
class NodeLayout {
 public:
  NodeLayout(int dim, bool pinned) : dim_(dim), pinned_(pinned) {}

  Eigen::Index size() const { return dim_ + (pinned_ ? 0 : 3); }

  std::tuple<std::span<const double>, Complex, Complex> split(const Vec& x, double t) const {
    const std::span<const double> params(x.data(), dim_);
    if (pinned_) return {params, Complex(0.0, 0.0), Complex(t, 0.0)};
    const Complex l1 = to_disc(x(dim_), x(dim_ + 1));
    const Complex q = t * unit(x(dim_ + 2));
    return {params, l1, (l1 + q) / (1.0 + std::conj(l1) * q)};
  }

 private:
  int dim_;
  bool pinned_;
};

Interpolant search_family(const DiscFamily& family, const TetraPoint& w, const TetraPoint& z,
                          long evaluation_limit, int max_starts, std::mt19937_64& rng,
                          long& evaluations) {
  const NodeLayout layout(family.dimension, family.automorphism_invariant);
  const Eigen::Index n = layout.size();
  const auto mismatch = [&](const Vec& x, double t, Vec& r) {
    auto [params, l1, l2] = layout.split(x, t);
    const TetraPoint a = family.eval(params, l1) - w;
    const TetraPoint b = family.eval(params, l2) - z;
    for (int k = 0; k < 3; ++k) {
      put_complex(r, 2 * k, a(k));
      put_complex(r, 6 + 2 * k, b(k));
    }
  };
  // Fixed t: pure interpolation.
  const auto interpolation_at = [&](double t) -> ResidualFunction {
    return [&, t](const Vec& x) {
      Vec r(12);
      mismatch(x, t, r);
      return r;
    };
  };
  // Free t = v^2 / (1 + v^2) as the last variable.
  const ResidualFunction interpolation_free = [&](const Vec& xv) {
    const double v2 = xv(n) * xv(n);
    Vec r(12);
    mismatch(xv.head(n), v2 / (1.0 + v2), r);
    return r;
  };
  const auto solve_at = [&](double t, const Vec& x0, int iterations) {
    LevenbergMarquardtOptions options;
    options.max_iterations = iterations;
    options.cost_target = 1e-26;
    return levenberg_marquardt(interpolation_at(t), x0, options, evaluations, evaluation_limit);
  };

  Interpolant best;
  std::normal_distribution<double> normal(0.0, 1.0);
  int agreeing = 0;
  for (int start = 0; start < max_starts && evaluations < evaluation_limit; ++start) {
    // Interpolate first at a generous node distance, where interpolants are plentiful.
    Vec x0(n);
    double t_hi = 0.5;
    if (start == 0) {
      // Near the degenerate members: inner maps vanish and nodes sit at the origin.
      x0.setZero();
      x0(0) = 0.5;
    } else if (start == 1) {
      x0.setConstant(0.1);
      t_hi = 0.9;
    } else {
      for (Eigen::Index k = 0; k < n; ++k) x0(k) = normal(rng);
      t_hi = std::uniform_real_distribution<double>(0.6, 0.99)(rng);
    }
    // Steps must interpolate to near machine precision so that rigid families cannot
    // trade residual for a smaller node distance.
    const auto feasible = [&](const Vec& x, double t) {
      return interpolation_at(t)(x).norm() < 1e-12;
    };
    Vec xv(n + 1);
    xv << x0, std::sqrt(t_hi / (1.0 - t_hi));
    LevenbergMarquardtOptions options;
    options.max_iterations = 100;
    options.cost_target = 1e-26;
    xv = levenberg_marquardt(interpolation_free, xv, options, evaluations, evaluation_limit).x;
    t_hi = xv(n) * xv(n) / (1.0 + xv(n) * xv(n));
    Vec x_hi = xv.head(n);
    if (!feasible(x_hi, t_hi)) continue;
    // Walk t downwards, warm-starting each solve from the last feasible point; the step
    // grows after a success and shrinks after a failure.
    double step = 0.25 * t_hi;
    while (step > 1e-11 && evaluations < evaluation_limit) {
      const double t = std::max(0.0, t_hi - step);
      const Vec x = solve_at(t, x_hi, 12).x;
      if (feasible(x, t)) {
        t_hi = t;
        x_hi = x;
        step = std::min(2.0 * step, t_hi);
      } else {
        step *= 0.5;
      }
    }
    auto [params, l1, l2] = layout.split(x_hi, t_hi);
    const double m = mobius_m(l1, l2);
    const double res = interpolation_at(t_hi)(x_hi).norm();
    if (std::abs(m - best.m) <= 1e-9) ++agreeing;
    if (m < best.m - 1e-9) agreeing = 0;
    if (m < best.m) best = {m, res, l1, l2, std::vector<double>(params.begin(), params.end())};
    // Two feasible starts that land on the same value end the family.
    if (agreeing >= 1) break;
  }
  return best;
}

}  // namespace

UpperBoundResult disc_search_upper_bound(const TetraPoint& w, const TetraPoint& z,
                                         std::span<const DiscFamily> families,
                                         const SearchBudget& budget) {
  if (!is_interior(w) || !is_interior(z)) {
    throw PreconditionError("disc_search_upper_bound requires interior points");
  }
  UpperBoundResult result;
  if ((w - z).norm() == 0.0) {
    result.bound = HyperbolicDistance::from_m(0.0);
    result.family = "constant";
    return result;
  }
  if (families.empty()) return result;
  const long per_run = budget.evaluations / static_cast<long>(2 * families.size());
  const TetraPoint targets[2][2] = {{w, z}, {sigma(w), sigma(z)}};
  for (std::size_t k = 0; k < families.size(); ++k) {
    for (int orientation = 0; orientation < 2; ++orientation) {
      std::mt19937_64 rng(budget.seed + 0x9e3779b97f4a7c15ULL * (2 * k + orientation + 1));
      // Budget left unused by earlier runs carries over.
      const long limit = per_run * static_cast<long>(2 * k + orientation + 1);
      const Interpolant found =
          search_family(families[k], targets[orientation][0], targets[orientation][1], limit,
                        budget.max_starts_per_family, rng, result.evaluations);
      if (!std::isfinite(found.m)) continue;
      if (!result.bound || found.m < result.bound->m_scale) {
        result.bound = HyperbolicDistance::from_m(found.m);
        result.family = families[k].name;
        result.swapped = orientation == 1;
        result.lambda1 = found.lambda1;
        result.lambda2 = found.lambda2;
        result.params = found.params;
        result.residual = found.residual;
      }
    }
  }
  return result;
}

UpperBoundResult disc_search_upper_bound(const TetraPoint& w, const TetraPoint& z,
                                         const SearchBudget& budget) {
  const auto families = default_search_families();
  return disc_search_upper_bound(w, z, families, budget);
}

namespace {

/// Parameter layout for the origin-geodesic solver at a given phi degree:
/// [c, omega1, omega2] for constant phi, then [s, u, b_1, ..., b_{degree-1}].
OriginGeodesicParams decode_solver_params(const Vec& x, int degree, bool swapped) {
  OriginGeodesicParams p;
  p.C = closed_unit_interval(x(0));
  p.omega1 = unit(x(1));
  p.omega2 = unit(x(2));
  p.swapped = swapped;
  if (degree == 0) {
    p.phi = BlaschkeMap::constant(-p.C);
    return p;
  }
  std::vector<Complex> zeros;
  for (int j = 0; j < degree - 1; ++j) zeros.push_back(to_disc(x(5 + 2 * j), x(6 + 2 * j)));
  p.phi = phi_through(p.C, std::sin(x(3)), unit(x(4)), std::move(zeros));
  return p;
}

TetraPoint solver_eval(const Vec& x, int degree, bool swapped, Complex lambda) {
  const double C = closed_unit_interval(x(0));
  const Complex omega1 = unit(x(1));
  const Complex omega2 = unit(x(2));
  Complex g(0.0, 0.0);
  if (degree > 0) {
    g = scaled_product(std::span<const double>(x.data() + 3, x.size() - 3), degree - 1, lambda);
  }
  const Complex xl = lambda * g;
  const Complex d = 1.0 - C * xl;
  const TetraPoint f(omega1 * xl * (1.0 - C) / d, omega2 * lambda * (1.0 - C) / d,
                     omega1 * omega2 * lambda * (xl - C) / d);
  return swapped ? sigma(f) : f;
}

}  // namespace

GeodesicSolveResult solve_origin_geodesic_through(const TetraPoint& z, Complex lambda0,
                                                  int max_degree, const SearchBudget& budget) {
  if (!is_interior(z)) throw PreconditionError("solve_origin_geodesic_through needs an interior point");
  require_open_disc(lambda0, "lambda0");
  if (max_degree < 0) throw PreconditionError("max_degree must be non-negative");

  GeodesicSolveResult result;
  result.residual = std::numeric_limits<double>::infinity();
  const long per_run = budget.evaluations / (2L * (max_degree + 1));
  std::normal_distribution<double> normal(0.0, 1.0);

  for (int degree = 0; degree <= max_degree; ++degree) {
    const int dim = degree == 0 ? 3 : 5 + 2 * (degree - 1);
    std::optional<OriginGeodesicParams> chosen;
    double chosen_residual = 0.0;
    for (const bool swapped : {false, true}) {
      std::mt19937_64 rng(budget.seed + 1000003ULL * (2 * degree + (swapped ? 1 : 0) + 1));
      // Budget left unused by earlier runs carries over.
      const long limit = per_run * (2L * degree + (swapped ? 1 : 0) + 1);
      const ResidualFunction residual = [&](const Vec& x) {
        const TetraPoint diff = solver_eval(x, degree, swapped, lambda0) - z;
        Vec r(6);
        for (int k = 0; k < 3; ++k) put_complex(r, 2 * k, diff(k));
        return r;
      };
      for (int start = 0; start < budget.max_starts_per_family && result.evaluations < limit;
           ++start) {
        Vec x(dim);
        for (Eigen::Index k = 0; k < dim; ++k) x(k) = start == 0 ? 0.0 : normal(rng);
        if (start == 0 && degree > 0) x(3) = 1.0;
        LevenbergMarquardtOptions options;
        options.max_iterations = 200;
        options.cost_target = 1e-26;
        x = levenberg_marquardt(residual, x, options, result.evaluations, limit).x;
        const OriginGeodesicParams params = decode_solver_params(x, degree, swapped);
        const double res = (eval_origin_geodesic(params, lambda0) - z).norm();
        result.residual = std::min(result.residual, res);
        if (!(res < 1e-8)) continue;
        if (!chosen || params.C < chosen->C - 1e-12) {
          chosen = params;
          chosen_residual = res;
        }
      }
    }
    if (chosen) {
      result.params = chosen;
      result.residual = chosen_residual;
      result.degree = degree;
      return result;
    }
  }
  return result;
}

}  // namespace tetra
