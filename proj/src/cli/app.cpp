#include "tetra/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tetra/cli/parse.hpp"
#include "tetra/cli/report.hpp"
#include "tetra/disc_search.hpp"
#include "tetra/domains.hpp"
#include "tetra/extremals.hpp"
#include "tetra/geodesics.hpp"
#include "tetra/verification.hpp"

namespace tetra::cli {

namespace {

Json count(long long value) { return Json{{"raw", value}}; }

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

TetraPoint parse_tetra_point(const std::vector<Complex>& c, const std::string& what) {
  if (c.size() != 3) throw ParseError(what + " needs 3 complex components");
  return TetraPoint(c[0], c[1], c[2]);
}

TetraPoint parse_tetra_point(const std::string& text, const std::string& what) {
  return parse_tetra_point(parse_complex_list(text), what);
}

Json blaschke_json(const BlaschkeMap& map) {
  return Json{{"unimodular", raw(map.unimodular())},
              {"scale", raw(map.scale())},
              {"shift", raw(map.shift())},
              {"zeros", raw(map.zeros())}};
}

/// Options shared by every subcommand.
struct Common {
  double default_tol = kBoundaryTol;
  bool timing = false;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  Json diagnostics(Json extra = Json::object()) const {
    if (timing) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
      extra["runtime_seconds"] = raw(elapsed.count());
    }
    return extra;
  }
};

// member ----------------------------------------------------------------------

struct MemberArgs {
  std::string domain;
  std::vector<std::string> components;
  std::optional<double> tol;
  bool psi_sup = false;
};

int cmd_member(const MemberArgs& a, const Common& common, std::ostream& out) {
  const double tol = a.tol.value_or(common.default_tol);
  if (!(tol > 0.0)) throw ParseError("--tol must be positive");
  std::vector<Complex> c;
  for (const auto& s : a.components) c.push_back(parse_complex(s));
  Json inputs{{"domain", a.domain}, {"point", raw(c)}, {"tol", raw(tol)}};
  Json results;
  Location location;
  if (a.domain == "tetrablock") {
    const auto report = tetra_membership(parse_tetra_point(c, "tetrablock point"), tol, a.psi_sup);
    location = report.location;
    results["location"] = std::string(to_string(location));
    results["e_value"] = raw(report.e_value);
    if (report.psi_sup) results["psi_sup"] = raw(*report.psi_sup);
  } else {
    if (c.size() != 2) throw ParseError("g2 point needs 2 complex components");
    const auto report = g2_membership(G2Point(c[0], c[1]), tol);
    location = report.location;
    results["location"] = std::string(to_string(location));
    results["max_root_modulus"] = raw(report.max_root_modulus);
    results["roots"] = raw(std::vector<Complex>(report.roots.begin(), report.roots.end()));
  }
  write_json(out, envelope("member", inputs, results,
                           common.diagnostics({{"tolerance_used", raw(tol)}})));
  switch (location) {
    case Location::Interior:
      return kExitOk;
    case Location::Boundary:
      return kExitBoundary;
    case Location::Exterior:
      break;
  }
  return kExitExterior;
}

// distance --------------------------------------------------------------------

struct DistanceArgs {
  std::string w;
  std::string z;
  std::string lower = "psi_omega,psi_omega_sigma,magic_f";
  std::string upper = "origin_geodesic,transported,product,general";
  long budget = SearchBudget{}.evaluations;
  std::uint64_t seed = 0;
};

std::vector<DiscFamily> select_disc_families(const std::vector<std::string>& names) {
  const auto all = default_search_families();
  std::vector<DiscFamily> out;
  for (const auto& name : names) {
    const auto it = std::find_if(all.begin(), all.end(), [&](const DiscFamily& f) { return f.name == name; });
    if (it == all.end()) throw ParseError("unknown disc family: " + name);
    out.push_back(*it);
  }
  return out;
}

/// The closed form for pairs (0, 0, w), (0, z, w) in either order.
std::optional<HyperbolicDistance> special_closed_form(const TetraPoint& a, const TetraPoint& b) {
  if (a(0) != 0.0 || b(0) != 0.0 || a(2) != b(2)) return std::nullopt;
  if (a(1) == 0.0) return lempert_special(b(1), b(2));
  if (b(1) == 0.0) return lempert_special(a(1), a(2));
  return std::nullopt;
}

int cmd_distance(const DistanceArgs& a, const Common& common, std::ostream& out) {
  const TetraPoint w = parse_tetra_point(a.w, "w");
  const TetraPoint z = parse_tetra_point(a.z, "z");
  const auto lower_names = split_names(a.lower);
  for (const auto& name : lower_names) {
    if (!ExtremalRegistry::builtin().contains(name)) throw ParseError("unknown extremal family: " + name);
  }
  const auto families = select_disc_families(split_names(a.upper));
  if (a.budget < 0) throw ParseError("--budget must be non-negative");
  if (!is_interior(w) || !is_interior(z)) {
    throw PreconditionError("distance needs interior points of the tetrablock");
  }
  const SearchBudget budget{a.budget, a.seed, SearchBudget{}.max_starts_per_family};

  Json inputs{{"w", raw_point(w)},
              {"z", raw_point(z)},
              {"lower_families", lower_names},
              {"upper_families", split_names(a.upper)},
              {"budget", count(a.budget)},
              {"seed", count(static_cast<long long>(a.seed))}};
  Json results;
  results["p_e"] = scaled(p_e(w, z));
  double lower_m = 0.0;
  if (lower_names.empty()) {
    results["c_lower"] = nullptr;
  } else {
    const auto lower = caratheodory_lower_bound(w, z, lower_names);
    lower_m = lower.distance.m_scale;
    results["c_lower"] = Json{{"distance", scaled(lower.distance)},
                              {"family", lower.family},
                              {"omega", lower.omega ? raw(*lower.omega) : Json(nullptr)}};
  }
  const auto upper = disc_search_upper_bound(w, z, families, budget);
  Json k_upper{{"found", upper.bound.has_value()}};
  k_upper["distance"] = upper.bound ? scaled(*upper.bound) : Json(nullptr);
  k_upper["family"] = upper.family;
  k_upper["swapped"] = upper.swapped;
  k_upper["lambda1"] = raw(upper.lambda1);
  k_upper["lambda2"] = raw(upper.lambda2);
  k_upper["residual"] = raw(upper.residual);
  k_upper["evaluations"] = count(upper.evaluations);
  results["k_upper"] = k_upper;
  const auto closed = special_closed_form(w, z);
  results["closed_form"] = closed ? scaled(*closed) : Json(nullptr);
  const bool violated = upper.bound && lower_m > upper.bound->m_scale + 1e-9;
  results["sandwich_violated"] = violated;

  Json diagnostics{{"interpolation_tolerance", raw(kInterpolationTol)},
                   {"sandwich_slack", raw(1e-9)},
                   {"max_starts_per_family", count(budget.max_starts_per_family)}};
  write_json(out, envelope("distance", inputs, results, common.diagnostics(diagnostics)));
  return violated ? kExitVerification : kExitOk;
}

// geodesic --------------------------------------------------------------------

struct GeodesicArgs {
  std::string domain = "tetrablock";
  /// Defaults to 0, or 1 on g2.
  std::optional<double> C_set;
  std::string phi = "id";
  std::string psi = "id";
  std::string omega1 = "1";
  std::string omega2 = "1";
  std::string omega = "1";
  bool swapped = false;
  std::vector<std::string> lambdas;
  int samples = 16;
  std::optional<double> tol;
  // solve
  std::string point;
  std::string lambda0 = "0.5";
  int max_degree = 2;
  long budget = SearchBudget{}.evaluations;
  std::uint64_t seed = 0;
};

struct DiscSpec {
  std::string domain;
  OriginGeodesicParams origin;
  GeneralDiscParams general;
  G2GeodesicParams g2;
  Json echo;
};

DiscSpec parse_disc(const GeodesicArgs& a) {
  DiscSpec s;
  s.domain = a.domain;
  if (a.domain == "g2") {
    s.g2.C = a.C_set.value_or(1.0);
    s.g2.omega = parse_complex(a.omega);
    s.g2.validate();
    s.echo = Json{{"domain", a.domain}, {"C", raw(s.g2.C)}, {"omega", raw(s.g2.omega)}};
    return s;
  }
  const double C = a.C_set.value_or(0.0);
  const Complex omega1 = parse_complex(a.omega1);
  const Complex omega2 = parse_complex(a.omega2);
  const BlaschkeMap phi = parse_self_map(a.phi, C);
  s.echo = Json{{"domain", a.domain},
                {"C", raw(C)},
                {"omega1", raw(omega1)},
                {"omega2", raw(omega2)},
                {"phi", a.phi}};
  if (a.domain == "tetrablock") {
    s.origin = {C, omega1, omega2, phi, a.swapped};
    s.origin.validate();
    s.echo["swapped"] = a.swapped;
  } else {
    s.general = {C, omega1, omega2, phi, parse_self_map(a.psi, C)};
    s.general.validate();
    s.echo["psi"] = a.psi;
  }
  return s;
}

std::vector<Complex> sample_lambdas(const GeodesicArgs& a) {
  if (a.samples < 1) throw ParseError("--samples must be positive");
  if (a.lambdas.empty()) return residual_sample_points(a.samples);
  std::vector<Complex> out;
  for (const auto& s : a.lambdas) {
    const Complex l = parse_complex(s);
    require_open_disc(l, "lambda");
    out.push_back(l);
  }
  return out;
}

int cmd_geodesic_eval(const GeodesicArgs& a, const Common& common, std::ostream& out) {
  const DiscSpec s = parse_disc(a);
  Json rows = Json::array();
  for (const Complex l : sample_lambdas(a)) {
    Json row{{"lambda", raw(l)}};
    if (s.domain == "g2") {
      const G2Point p = g2_origin_geodesic(s.g2, l);
      const auto m = g2_membership(p, common.default_tol);
      row["point"] = raw_point(p);
      row["max_root_modulus"] = raw(m.max_root_modulus);
      row["location"] = std::string(to_string(m.location));
    } else {
      const TetraPoint p = s.domain == "tetrablock" ? eval_origin_geodesic(s.origin, l)
                                                    : eval_general_disc(s.general, l);
      const auto m = tetra_membership(p, common.default_tol);
      row["point"] = raw_point(p);
      row["e_value"] = raw(m.e_value);
      row["location"] = std::string(to_string(m.location));
    }
    rows.push_back(row);
  }
  write_json(out, envelope("geodesic eval", s.echo, Json{{"rows", rows}},
                           common.diagnostics({{"tolerance_used", raw(common.default_tol)}})));
  return kExitOk;
}

int cmd_geodesic_verify(const GeodesicArgs& a, const Common& common, std::ostream& out) {
  const DiscSpec s = parse_disc(a);
  const double tol = a.tol.value_or(common.default_tol);
  if (!(tol > 0.0)) throw ParseError("--tol must be positive");
  DiscVerificationReport report;
  if (s.domain == "g2") {
    report = verify_g2_geodesic(s.g2, tol);
  } else if (s.domain == "tetrablock") {
    report = verify_origin_geodesic(s.origin, tol);
  } else {
    report = verify_general_disc(s.general, tol);
  }
  Json results{{"verdict", std::string(to_string(report.verdict))},
               {s.domain == "g2" ? "max_root_modulus" : "max_e_value", raw(report.max_e_value)},
               {"left_inverse_residual", raw(report.left_inverse_residual)},
               {"samples", count(report.samples)}};
  write_json(out, envelope("geodesic verify", s.echo, results,
                           common.diagnostics({{"tolerance_used", raw(tol)}})));
  return report.verdict == DiscVerdict::Failed ? kExitVerification : kExitOk;
}

int cmd_geodesic_solve(const GeodesicArgs& a, const Common& common, std::ostream& out) {
  const TetraPoint z = parse_tetra_point(a.point, "--point");
  const Complex l0 = parse_complex(a.lambda0);
  if (a.budget < 0) throw ParseError("--budget must be non-negative");
  const SearchBudget budget{a.budget, a.seed, SearchBudget{}.max_starts_per_family};
  const auto solved = solve_origin_geodesic_through(z, l0, a.max_degree, budget);
  Json inputs{{"point", raw_point(z)},
              {"lambda", raw(l0)},
              {"max_degree", count(a.max_degree)},
              {"budget", count(a.budget)},
              {"seed", count(static_cast<long long>(a.seed))}};
  Json results{{"found", solved.params.has_value()}};
  if (solved.params) {
    const auto& p = *solved.params;
    results["params"] = Json{{"C", raw(p.C)},
                             {"omega1", raw(p.omega1)},
                             {"omega2", raw(p.omega2)},
                             {"swapped", p.swapped},
                             {"phi", blaschke_json(p.phi)}};
    results["degree"] = count(solved.degree);
  }
  results["residual"] = raw(solved.residual);
  results["evaluations"] = count(solved.evaluations);
  write_json(out, envelope("geodesic solve", inputs, results,
                           common.diagnostics({{"residual_tolerance", raw(1e-8)}})));
  return solved.params ? kExitOk : kExitVerification;
}

// verify-paper ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 0;
};

int cmd_verify_paper(const VerifyArgs& a, const Common& common, std::ostream& out) {
  const std::vector<std::string> names = a.suite == "all" ? suite_names() : std::vector<std::string>{a.suite};
  Json suites = Json::array();
  bool all_passed = true;
  for (const auto& name : names) {
    const SuiteReport report = run_suite(name, a.seed);
    all_passed = all_passed && report.passed;
    Json metrics = Json::object();
    for (const auto& m : report.metrics) metrics[m.name] = Json{{m.scale, m.value}};
    suites.push_back(Json{{"name", report.name},
                          {"passed", report.passed},
                          {"samples", count(report.samples)},
                          {"metrics", metrics},
                          {"failures", report.failures}});
  }
  Json inputs{{"suite", a.suite}, {"seed", count(static_cast<long long>(a.seed))}};
  write_json(out, envelope("verify-paper", inputs, Json{{"passed", all_passed}, {"suites", suites}},
                           common.diagnostics()));
  return all_passed ? kExitOk : kExitVerification;
}

// sweep -----------------------------------------------------------------------

struct SweepArgs {
  std::string quantity;
  std::string C = "0.05:0.95:0.05";
  std::string lambda = "0.1";
  std::string z = "0.1:0.8:0.1";
  std::string w = "0:0.8:0.1";
  long budget = SearchBudget{}.evaluations;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string output = "-";
};

Table sweep_p_e(const SweepArgs& a, Json& inputs) {
  const auto Cs = parse_range(a.C);
  const Complex lambda = parse_complex(a.lambda);
  require_open_disc(lambda, "lambda");
  inputs["C"] = a.C;
  inputs["lambda"] = raw(lambda);
  Table table({"c", "lambda", "p_e_m_scale", "p_e_p_scale", "closed_form_m_scale", "magic_f_m_scale"});
  const std::vector<ExtremalFamilyId> magic = {{ExtremalFamily::MagicF, std::nullopt}};
  const double r = std::abs(lambda);
  for (const double C : Cs) {
    if (!(C > 0.0 && C < 1.0)) throw PreconditionError("sweep p_e needs C in (0, 1)");
    const TetraPoint w(0.0, 0.0, -C);
    const TetraPoint z(0.0, lambda * (1.0 - C), -C);
    const auto pe = p_e(w, z);
    table.add_row({C, format_complex(lambda), pe.m_scale, pe.p_scale, r / (1.0 + C - C * r),
                   caratheodory_lower_bound(w, z, magic).distance.m_scale});
  }
  return table;
}

Table sweep_k_upper(const SweepArgs& a, Json& inputs) {
  const auto zs = parse_range(a.z);
  const auto ws = parse_range(a.w);
  if (a.budget < 0) throw ParseError("--budget must be non-negative");
  inputs["z"] = a.z;
  inputs["w"] = a.w;
  inputs["budget"] = count(a.budget);
  inputs["seed"] = count(static_cast<long long>(a.seed));
  const SearchBudget budget{a.budget, a.seed, SearchBudget{}.max_starts_per_family};
  Table table({"w", "z", "k_upper_m_scale", "lempert_m_scale", "difference", "equal", "family"});
  for (const double w : ws) {
    for (const double z : zs) {
      const TetraPoint a1(0.0, 0.0, w);
      const TetraPoint b1(0.0, z, w);
      // Pairs outside the tetrablock are left out of the grid.
      if (!is_interior(a1) || !is_interior(b1)) continue;
      const double exact = lempert_special(z, w).m_scale;
      const auto found = disc_search_upper_bound(a1, b1, budget);
      const double m = found.bound ? found.bound->m_scale : std::numeric_limits<double>::quiet_NaN();
      const double diff = m - exact;
      table.add_row({w, z, m, exact, diff, diff <= 1e-9 && diff >= -1e-6, found.family});
    }
  }
  return table;
}

int cmd_sweep(const SweepArgs& a, const Common& common, std::ostream& out) {
  Json inputs{{"quantity", a.quantity}, {"format", a.format}, {"output", a.output}};
  const Table table = a.quantity == "p_e" ? sweep_p_e(a, inputs) : sweep_k_upper(a, inputs);
  const auto emit = [&](std::ostream& stream) {
    if (a.format == "csv") {
      table.write_csv(stream);
    } else {
      table.write_json_lines(stream);
    }
  };
  if (a.output == "-") {
    emit(out);
    return kExitOk;
  }
  std::ofstream file(a.output, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open " + a.output);
  emit(file);
  file.close();
  if (!file) throw std::ios_base::failure("cannot write " + a.output);
  write_json(out, envelope("sweep", inputs, Json{{"rows", count(static_cast<long long>(table.rows()))}},
                           common.diagnostics()));
  return kExitOk;
}

double default_tolerance() {
  const char* env = std::getenv("TETRA_DEFAULT_TOL");
  if (env == nullptr || *env == '\0') return kBoundaryTol;
  const double tol = parse_real(env);
  if (!(tol > 0.0)) throw ParseError("TETRA_DEFAULT_TOL must be positive");
  return tol;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant distances and complex geodesics of the tetrablock", "tetra"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--timing", common.timing, "Report the runtime in diagnostics (not deterministic)");
  app.fallthrough();

  MemberArgs member_args;
  auto* member = app.add_subcommand("member", "Classify a point of the tetrablock or the symmetrized bidisc");
  member->add_option("domain", member_args.domain)->required()->check(CLI::IsMember({"tetrablock", "g2"}));
  member->add_option("components", member_args.components, "Complex coordinates")->required();
  member->add_option("--tol", member_args.tol, "Boundary tolerance");
  member->add_flag("--psi-sup", member_args.psi_sup, "Also report the Psi supremum");

  DistanceArgs distance_args;
  auto* distance = app.add_subcommand("distance", "Lower and upper bounds for the invariant distances");
  distance->add_option("w", distance_args.w, "First point z1,z2,z3")->required();
  distance->add_option("z", distance_args.z, "Second point z1,z2,z3")->required();
  distance->add_option("--lower-families", distance_args.lower)->capture_default_str();
  distance->add_option("--upper-families", distance_args.upper)->capture_default_str();
  distance->add_option("--budget", distance_args.budget, "Residual evaluations")->capture_default_str();
  distance->add_option("--seed", distance_args.seed)->capture_default_str();

  GeodesicArgs geo;
  auto* geodesic = app.add_subcommand("geodesic", "Evaluate, verify or recover geodesics");
  geodesic->require_subcommand(1);
  const auto add_disc_options = [&](CLI::App* sub) {
    sub->add_option("--domain", geo.domain)->check(CLI::IsMember({"tetrablock", "general", "g2"}))->capture_default_str();
    sub->add_option("--C", geo.C_set, "Geodesic parameter");
    sub->add_option("--phi", geo.phi, "Self-map: id, const:c, auto:a[:w], through:s[:u[:zeros]], blaschke:u:s:shift[:zeros]")
        ->capture_default_str();
    sub->add_option("--psi", geo.psi, "Second self-map (general discs)")->capture_default_str();
    sub->add_option("--omega1", geo.omega1)->capture_default_str();
    sub->add_option("--omega2", geo.omega2)->capture_default_str();
    sub->add_option("--omega", geo.omega, "Rotation (g2)")->capture_default_str();
    sub->add_flag("--swapped", geo.swapped, "Compose with the swap of z1 and z2");
    sub->add_option("--samples", geo.samples, "Roots of unity per radius in the sample pattern")->capture_default_str();
  };
  auto* geo_eval = geodesic->add_subcommand("eval", "Evaluate a disc");
  add_disc_options(geo_eval);
  geo_eval->add_option("--lambda", geo.lambdas, "Evaluation points (default: sample pattern)");
  auto* geo_verify = geodesic->add_subcommand("verify", "Verify membership and the left inverse");
  add_disc_options(geo_verify);
  geo_verify->add_option("--tol", geo.tol, "Verification tolerance");
  auto* geo_solve = geodesic->add_subcommand("solve", "Find an origin geodesic through a point");
  geo_solve->add_option("--point", geo.point, "Target z1,z2,z3")->required();
  geo_solve->add_option("--lambda", geo.lambda0, "Disc point mapped to the target")->capture_default_str();
  geo_solve->add_option("--max-degree", geo.max_degree)->capture_default_str();
  geo_solve->add_option("--budget", geo.budget)->capture_default_str();
  geo_solve->add_option("--seed", geo.seed)->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify-paper", "Run the verification suites");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.insert(suite_choices.begin(), "all");
  verify->add_option("--suite", verify_args.suite)->check(CLI::IsMember(suite_choices))->capture_default_str();
  verify->add_option("--seed", verify_args.seed)->capture_default_str();
  bool json_flag = false;
  for (auto* sub : {verify, geo_eval, geo_verify, geo_solve}) {
    sub->add_flag("--json", json_flag, "Reports are always JSON; accepted for compatibility");
  }

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Tabulate a quantity over a grid");
  sweep->add_option("quantity", sweep_args.quantity)->required()->check(CLI::IsMember({"p_e", "k_upper"}));
  sweep->add_option("--C", sweep_args.C, "p_e: C grid start:stop:step")->capture_default_str();
  sweep->add_option("--lambda", sweep_args.lambda, "p_e: disc point")->capture_default_str();
  sweep->add_option("--z", sweep_args.z, "k_upper: |z| grid")->capture_default_str();
  sweep->add_option("--w", sweep_args.w, "k_upper: w grid")->capture_default_str();
  sweep->add_option("--budget", sweep_args.budget)->capture_default_str();
  sweep->add_option("--seed", sweep_args.seed)->capture_default_str();
  sweep->add_option("--out", sweep_args.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sweep->add_option("--output", sweep_args.output, "File path, '-' for standard output")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    common.default_tol = default_tolerance();
    if (member->parsed()) return cmd_member(member_args, common, out);
    if (distance->parsed()) return cmd_distance(distance_args, common, out);
    if (geo_eval->parsed()) return cmd_geodesic_eval(geo, common, out);
    if (geo_verify->parsed()) return cmd_geodesic_verify(geo, common, out);
    if (geo_solve->parsed()) return cmd_geodesic_solve(geo, common, out);
    if (verify->parsed()) return cmd_verify_paper(verify_args, common, out);
    if (sweep->parsed()) return cmd_sweep(sweep_args, common, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerification;
  }
  err << "error: no command\n";
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv = {"tetra"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace tetra::cli
