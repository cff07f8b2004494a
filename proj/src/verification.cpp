#include "tetra/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "tetra/disc_search.hpp"
#include "tetra/domains.hpp"
#include "tetra/extremals.hpp"
#include "tetra/geodesics.hpp"
#include "tetra/necessary.hpp"

namespace tetra {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Complex disc_point(double max_radius) {
    const double r = max_radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
  }

  Complex unimodular() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Constant or a shifted scaled Blaschke product of degree 1-2.
  BlaschkeMap self_map() {
    const int degree = integer(0, 2);
    if (degree == 0) return BlaschkeMap::constant(disc_point(0.95));
    std::vector<Complex> zeros;
    for (int k = 0; k < degree; ++k) zeros.push_back(disc_point(0.95));
    return BlaschkeMap(unimodular(), zeros, uniform(0.05, 1.0), disc_point(0.9));
  }

  OriginGeodesicParams origin_params() {
    OriginGeodesicParams p;
    p.C = uniform(0.0, 1.0);
    p.omega1 = unimodular();
    p.omega2 = unimodular();
    switch (integer(0, 2)) {
      case 0:
        p.phi = BlaschkeMap::constant(-p.C);
        break;
      case 1:
        p.phi = phi_through(p.C, 1.0, unimodular());
        break;
      default:
        p.phi = phi_through(p.C, uniform(0.1, 1.0), unimodular(), {disc_point(0.9)});
    }
    p.swapped = integer(0, 1) == 1;
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

SuiteReport named(const char* name) {
  SuiteReport report;
  report.name = name;
  return report;
}

void require(SuiteReport& report, bool ok, const std::string& what) {
  if (!ok) report.failures.push_back(what);
}

void finish(SuiteReport& report) { report.passed = report.failures.empty(); }

SuiteReport boundary_suite(Sampler& s) {
  SuiteReport report = named("boundary");
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double C = s.uniform(0.0, 1.0);
    const Complex omega1 = s.unimodular();
    const Complex omega2 = s.unimodular();
    const BlaschkeMap phi = s.self_map();
    for (int j = 0; j < 100; ++j) {
      const double e = tetra_e_value(eval_boundary_disc(C, omega1, omega2, phi, s.disc_point(0.999)));
      worst = std::max(worst, std::abs(e - 1.0));
      ++report.samples;
    }
  }
  report.metrics.push_back({"max_abs_e_value_minus_1", worst});
  require(report, worst < 1e-12, "boundary discs leave the boundary by more than 1e-12");
  finish(report);
  return report;
}

SuiteReport inclusion_suite(Sampler& s) {
  SuiteReport report = named("inclusion");
  double max_e = 0.0;
  long violations = 0;
  for (int k = 0; k < 1000; ++k) {
    GeneralDiscParams p;
    p.C = s.uniform(0.0, 1.0);
    p.omega1 = s.unimodular();
    p.omega2 = s.unimodular();
    p.phi = s.self_map();
    p.psi = s.self_map();
    for (int j = 0; j < 100; ++j) {
      const double e = tetra_e_value(eval_general_disc(p, s.disc_point(0.999)));
      max_e = std::max(max_e, e);
      if (!(e < 1.0)) ++violations;
      ++report.samples;
    }
  }
  report.metrics.push_back({"max_e_value", max_e});
  report.metrics.push_back({"min_margin", 1.0 - max_e});
  report.metrics.push_back({"violations", static_cast<double>(violations)});
  require(report, violations == 0, "general discs leave the tetrablock");
  finish(report);
  return report;
}

std::vector<OriginGeodesicParams> origin_sample(Sampler& s, int count) {
  std::vector<OriginGeodesicParams> out;
  for (int k = 0; k < count; ++k) out.push_back(s.origin_params());
  return out;
}

SuiteReport certificate_suite(Sampler& s) {
  SuiteReport report = named("certificate");
  double worst_inverse = 0.0;
  double worst_equality = 0.0;
  for (const auto& p : origin_sample(s, 200)) {
    const Complex base = origin_geodesic_certificate(p, eval_origin_geodesic(p, 0.0));
    for (const Complex lambda : residual_sample_points()) {
      const Complex value = origin_geodesic_certificate(p, eval_origin_geodesic(p, lambda));
      worst_inverse = std::max(worst_inverse, std::abs(value - lambda));
      worst_equality = std::max(worst_equality, std::abs(mobius_m(base, value) - std::abs(lambda)));
      ++report.samples;
    }
  }
  report.metrics.push_back({"max_left_inverse_residual", worst_inverse});
  report.metrics.push_back({"max_distance_equality_error", worst_equality, "m_scale"});
  require(report, worst_inverse < 1e-10, "left-inverse residual above 1e-10");
  require(report, worst_equality < 1e-12, "certified distance differs from |lambda| by 1e-12");
  finish(report);
  return report;
}

SuiteReport special_pairs_suite(std::uint64_t seed) {
  SuiteReport report = named("prop41");
  double above = -1.0;
  double below = 1.0;
  double extremal = 0.0;
  long missing = 0;
  SearchBudget budget;
  budget.seed = seed;
  for (int j = 0; j < 10; ++j) {
    for (int i = 0; i < 10; ++i) {
      const double rw = 0.09 * (j + 0.5);
      const double rz = (0.95 - rw) * (i + 1) / 11.0;
      const Complex w = std::polar(rw, 0.3 * j + 0.1);
      const Complex z = std::polar(rz, 0.7 * i);
      const TetraPoint a(0.0, 0.0, w);
      const TetraPoint b(0.0, z, w);
      const double exact = lempert_special(z, w).m_scale;
      ++report.samples;
      const auto found = disc_search_upper_bound(a, b, budget);
      if (found.bound) {
        above = std::max(above, found.bound->m_scale - exact);
        below = std::min(below, found.bound->m_scale - exact);
      } else {
        ++missing;
      }
      // phi = -|w| constant; nodes 0 and z / (1 - |w|).
      const Complex lambda = z / (1.0 - rw);
      const BlaschkeMap phi = BlaschkeMap::constant(-rw);
      const Complex omega1 = -w / rw;
      const double gap =
          std::max({(cor43_extremal(rw, omega1, 1.0, phi, 0.0) - a).norm(),
                    (cor43_extremal(rw, omega1, 1.0, phi, lambda) - b).norm(),
                    std::abs(std::abs(lambda) - exact)});
      extremal = std::max(extremal, gap);
    }
  }
  report.metrics.push_back({"max_search_minus_closed_form", above, "m_scale"});
  report.metrics.push_back({"min_search_minus_closed_form", below, "m_scale"});
  report.metrics.push_back({"max_extremal_residual", extremal});
  report.metrics.push_back({"pairs_without_interpolant", static_cast<double>(missing)});
  require(report, missing == 0, "disc search found no interpolant for some pairs");
  require(report, above <= 1e-9, "disc search exceeds the closed form by more than 1e-9");
  require(report, below >= -1e-6, "disc search undercuts the closed form by more than 1e-6");
  require(report, extremal < 1e-12, "the explicit extremal misses the closed form");
  finish(report);
  return report;
}

SuiteReport separation_suite() {
  SuiteReport report = named("prop5");
  const TetraPoint w(0.0, 0.0, -0.5);
  const TetraPoint z(0.0, 0.05, -0.5);
  const double pe = p_e(w, z).m_scale;
  const std::vector<ExtremalFamilyId> magic = {{ExtremalFamily::MagicF, std::nullopt}};
  const std::vector<ExtremalFamilyId> all = {{ExtremalFamily::PsiOmega, std::nullopt},
                                             {ExtremalFamily::PsiOmegaSigma, std::nullopt},
                                             {ExtremalFamily::MagicF, std::nullopt}};
  const double by_magic = caratheodory_lower_bound(w, z, magic).distance.m_scale;
  const double c_lower = caratheodory_lower_bound(w, z, all).distance.m_scale;
  report.samples = 1;
  report.metrics.push_back({"p_e", pe, "m_scale"});
  report.metrics.push_back({"magic_f_lower_bound", by_magic, "m_scale"});
  report.metrics.push_back({"c_lower", c_lower, "m_scale"});
  require(report, std::abs(pe - 0.068966) < 1e-6, "p_e differs from 0.068966");
  require(report, std::abs(by_magic - 0.070711) < 1e-6, "magic_f bound differs from 0.070711");
  require(report, c_lower > pe, "c_lower does not exceed p_e");
  finish(report);
  return report;
}

SuiteReport necessary_suite(Sampler& s) {
  SuiteReport report = named("necessary");
  double worst_tetra = 0.0;
  long failed = 0;
  for (const auto& p : origin_sample(s, 200)) {
    const VectorDisc disc = as_vector_disc(TetraDisc([p](Complex l) { return eval_origin_geodesic(p, l); }));
    for (const CircularAction& action :
         {CircularAction{1.0, 0.0, 1.0}, CircularAction{0.0, 1.0, 1.0}}) {
      const auto check = geodesic_necessary_check(origin_certificate_function(p), disc, action);
      worst_tetra = std::max(worst_tetra, check.fit.residual);
      if (check.verdict != NecessaryVerdict::Pass || !(check.fit.residual < 1e-7)) ++failed;
      ++report.samples;
    }
  }
  double worst_g2 = 0.0;
  double worst_a = 0.0;
  double worst_imag = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const double C = 1.0 + 0.05 * k;
    const Complex omega = s.unimodular();
    const VectorDisc disc =
        as_vector_disc(G2Disc([C, omega](Complex l) { return g2_origin_geodesic(C, omega, l); }));
    const auto check =
        geodesic_necessary_check(g2_certificate_function(omega), disc, CircularAction{1.0, 2.0});
    worst_g2 = std::max(worst_g2, check.fit.residual);
    worst_a = std::max(worst_a, std::abs(check.fit.a()));
    worst_imag = std::max(worst_imag, std::abs(check.fit.free_C_imag));
    if (check.verdict != NecessaryVerdict::Pass) ++failed;
    ++report.samples;
  }
  report.metrics.push_back({"max_tetrablock_fit_residual", worst_tetra});
  report.metrics.push_back({"max_g2_fit_residual", worst_g2});
  report.metrics.push_back({"max_g2_abs_a", worst_a});
  report.metrics.push_back({"max_g2_imag_C", worst_imag});
  require(report, failed == 0, "some fits failed");
  require(report, worst_tetra < 1e-7 && worst_g2 < 1e-7, "fit residual above 1e-7");
  require(report, worst_a < 1e-9, "G2 fits have a != 0");
  require(report, worst_imag < 1e-9, "G2 fits have non-real C");
  finish(report);
  return report;
}

SuiteReport g2_suite(Sampler& s) {
  SuiteReport report = named("g2");
  long failed = 0;
  double worst = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const auto check = verify_g2_geodesic({1.0 + 0.05 * k, s.unimodular()});
    worst = std::max(worst, check.left_inverse_residual);
    if (check.verdict != DiscVerdict::GeodesicVerified) ++failed;
    ++report.samples;
  }
  long witnesses = 0;
  for (const double C : {0.9, 2.1, 2.5}) {
    const Complex omega = s.unimodular();
    const auto witness = find_g2_window_violation(C, omega);
    if (witness && g2_membership(g2_origin_geodesic(C, omega, *witness)).location == Location::Exterior) {
      ++witnesses;
    }
    ++report.samples;
  }
  report.metrics.push_back({"max_left_inverse_residual", worst});
  report.metrics.push_back({"unverified_grid_points", static_cast<double>(failed)});
  report.metrics.push_back({"witnesses_found", static_cast<double>(witnesses)});
  require(report, failed == 0, "some C in [1, 2] fail verification");
  require(report, witnesses == 3, "missing witness outside [1, 2]");
  finish(report);
  return report;
}

SuiteReport membership_suite(Sampler& s) {
  SuiteReport report = named("membership");
  long disagreements = 0;
  long skipped = 0;
  for (int k = 0; k < 10000; ++k) {
    const TetraPoint z(s.disc_point(1.0), s.disc_point(1.0), s.disc_point(1.0));
    const double e = tetra_e_value(z);
    if (std::abs(e - 1.0) <= 1e-6) {
      ++skipped;
      continue;
    }
    if ((psi_sup(z) < 1.0) != (e < 1.0)) ++disagreements;
    ++report.samples;
  }
  report.metrics.push_back({"disagreements", static_cast<double>(disagreements)});
  report.metrics.push_back({"skipped_near_boundary", static_cast<double>(skipped)});
  require(report, disagreements == 0, "e-value and Psi classifications disagree");
  finish(report);
  return report;
}

SuiteReport rho_suite(Sampler& s) {
  SuiteReport report = named("rho");
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const TetraPoint z(s.disc_point(1.2), s.disc_point(1.2), s.disc_point(1.2));
    const double t = s.uniform(1e-6, 1.0);
    worst = std::max(worst, std::abs(rho_functional(quasi_scale(z, t)) - t * rho_functional(z)));
    ++report.samples;
  }
  report.metrics.push_back({"max_homogeneity_error", worst});
  require(report, worst < 1e-7, "rho is not homogeneous to 1e-7");
  finish(report);
  return report;
}

SuiteReport transport_suite(Sampler& s) {
  SuiteReport report = named("transport");
  long wrong = 0;
  long mixed = 0;
  for (int k = 0; k < 200; ++k) {
    OriginGeodesicParams p;
    p.C = s.uniform(0.0, 0.99);
    p.omega1 = s.unimodular();
    p.omega2 = s.unimodular();
    const bool automorphism = k % 2 == 0;
    p.phi = phi_through(p.C, automorphism ? 1.0 : 0.9, s.unimodular());
    const auto verdict = classify_disc(
        transport_disc([p](Complex l) { return eval_origin_geodesic(p, l); }), residual_sample_points());
    if (verdict == DiscClassification::Mixed) ++mixed;
    if (verdict != (automorphism ? DiscClassification::AllBoundary : DiscClassification::AllInterior)) {
      ++wrong;
    }
    ++report.samples;
  }
  report.metrics.push_back({"wrong_verdicts", static_cast<double>(wrong)});
  report.metrics.push_back({"mixed_verdicts", static_cast<double>(mixed)});
  require(report, wrong == 0 && mixed == 0, "transported discs break the dichotomy");
  finish(report);
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"boundary", "inclusion", "certificate", "prop41",
                                                 "prop5",    "necessary", "g2",          "membership",
                                                 "rho",      "transport"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
  const auto& names = suite_names();
  const auto index = static_cast<std::uint64_t>(std::find(names.begin(), names.end(), name) - names.begin());
  Sampler s(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
  if (name == "boundary") return boundary_suite(s);
  if (name == "inclusion") return inclusion_suite(s);
  if (name == "certificate") return certificate_suite(s);
  if (name == "prop41") return special_pairs_suite(seed);
  if (name == "prop5") return separation_suite();
  if (name == "necessary") return necessary_suite(s);
  if (name == "g2") return g2_suite(s);
  if (name == "membership") return membership_suite(s);
  if (name == "rho") return rho_suite(s);
  if (name == "transport") return transport_suite(s);
  throw PreconditionError("unknown suite: " + std::string(name));
}

}  // namespace tetra
