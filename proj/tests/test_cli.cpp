#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "tetra/cli/app.hpp"
#include "tetra/cli/parse.hpp"
#include "tetra/cli/report.hpp"

using namespace tetra;
using namespace tetra::cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Run tetra_cmd(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

double m_scale(const Json& j) { return j.at("m_scale").get<double>(); }

/// Every number sits directly under a scale label, apart from schema_version.
bool labelled(const Json& j, const std::string& key) {
  if (j.is_number()) return key == "raw" || key == "m_scale" || key == "p_scale" || key == "schema_version";
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (!labelled(v, k)) return false;
    }
  }
  if (j.is_array()) {
    for (const auto& v : j) {
      if (!labelled(v, key)) return false;
    }
  }
  return true;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tetra_cli_test_" + name);
}

}  // namespace

TEST_CASE("parse_complex accepts the documented literals") {
  CHECK(parse_complex("0.3") == Complex(0.3, 0.0));
  CHECK(parse_complex("-0.8") == Complex(-0.8, 0.0));
  CHECK(parse_complex("0.1+0.2i") == Complex(0.1, 0.2));
  CHECK(parse_complex("0.1-0.2i") == Complex(0.1, -0.2));
  CHECK(parse_complex("0.65i") == Complex(0.0, 0.65));
  CHECK(parse_complex("-0.65i") == Complex(0.0, -0.65));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("2-i") == Complex(2.0, -1.0));
  CHECK(parse_complex("1e-3-2e-4i") == Complex(1e-3, -2e-4));
  CHECK(parse_complex("+1E+2+3e-1i") == Complex(100.0, 0.3));
  CHECK(parse_complex(" 0.5 ") == Complex(0.5, 0.0));
  for (const char* bad : {"", "x", "1+", "1+2j", "inf", "nan", "1i2", "0.1.2", "--1", "1++2i"}) {
    CHECK_THROWS_AS(parse_complex(bad), ParseError);
  }
}

TEST_CASE("format_complex round trips through parse_complex") {
  std::mt19937_64 rng(81);
  std::normal_distribution<double> normal(0.0, 10.0);
  for (int k = 0; k < 1000; ++k) {
    const Complex c(normal(rng), k % 5 == 0 ? 0.0 : normal(rng));
    CHECK(parse_complex(format_complex(c)) == c);
  }
}

TEST_CASE("parse_complex_list and parse_range") {
  const auto list = parse_complex_list("0,0.05,-0.5");
  REQUIRE(list.size() == 3);
  CHECK(list[2] == Complex(-0.5, 0.0));
  CHECK(parse_range("0.05:0.95:0.05").size() == 19);
  CHECK(parse_range("0.5:0.4:0.1").empty());
  CHECK(parse_range("0.25") == std::vector<double>{0.25});
  CHECK(parse_range("0:1:0.5") == std::vector<double>{0.0, 0.5, 1.0});
  CHECK_THROWS_AS(parse_range("0:1:0"), ParseError);
  CHECK_THROWS_AS(parse_range("0:1"), ParseError);
  CHECK_THROWS_AS(parse_range("0:1:-0.1"), ParseError);
}

TEST_CASE("parse_self_map forms") {
  CHECK(parse_self_map("id", 0.0)(0.3) == Complex(0.3, 0.0));
  CHECK(parse_self_map("const:0.2i", 0.0)(0.7) == Complex(0.0, 0.2));
  const auto a = parse_self_map("auto:0.5:-1", 0.0);
  CHECK(a.is_automorphism());
  CHECK(std::abs(a(0.5)) < 1e-15);
  const auto t = parse_self_map("through:0.6:0.8+0.6i:0.1", 0.3);
  CHECK(std::abs(t(0.0) + 0.3) < 1e-15);
  CHECK(t.degree() == 2);
  const auto b = parse_self_map("blaschke:1:0.5:0.1:0.2:0.3", 0.0);
  CHECK(b.degree() == 2);
  CHECK(b.scale() == 0.5);
  for (const char* bad : {"", "foo", "id:1", "const", "auto", "through", "blaschke:1:0.5"}) {
    CHECK_THROWS_AS(parse_self_map(bad, 0.0), ParseError);
  }
}

TEST_CASE("csv fields and table layout") {
  CHECK(csv_field(0.1) == "0.10000000000000001");
  CHECK(csv_field(true) == "true");
  CHECK(csv_field(std::string("plain")) == "plain");
  CHECK(csv_field(std::string("a,b")) == "\"a,b\"");
  CHECK(csv_field(std::string("say \"hi\"")) == "\"say \"\"hi\"\"\"");
  CHECK(csv_field(std::string("two\nlines")) == "\"two\nlines\"");
  Table t({"zeta", "alpha", "mid"});
  t.add_row({1.0, std::string("x,y"), false});
  std::ostringstream csv;
  t.write_csv(csv);
  CHECK(csv.str() == "alpha,mid,zeta\r\n\"x,y\",false,1\r\n");
  std::ostringstream lines;
  t.write_json_lines(lines);
  CHECK(lines.str() == "{\"alpha\":\"x,y\",\"mid\":false,\"zeta\":1.0}\n");
  CHECK_THROWS(t.add_row({1.0}));
}

TEST_CASE("17 significant digits recover every double") {
  std::mt19937_64 rng(82);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const double x = u(rng) * std::pow(10.0, 20.0 * u(rng));
    CHECK(std::stod(csv_field(x)) == x);
  }
}

TEST_CASE("member examples and exit codes") {
  const auto interior = tetra_cmd({"member", "tetrablock", "0", "0.3", "0.5"});
  CHECK(interior.code == kExitOk);
  const Json j = interior.json();
  CHECK(j["command"] == "member");
  CHECK(j["schema_version"] == 1);
  CHECK(j["results"]["location"] == "interior");
  CHECK(std::abs(j["results"]["e_value"]["raw"].get<double>() - 0.7) < 1e-15);
  CHECK(labelled(j, ""));

  CHECK(tetra_cmd({"member", "tetrablock", "1", "0", "0"}).code == kExitBoundary);
  CHECK(tetra_cmd({"member", "tetrablock", "0", "0.4", "0.65i"}).code == kExitExterior);
  const auto g2 = tetra_cmd({"member", "g2", "--", "-0.8", "0.16"});
  CHECK(g2.code == kExitOk);
  CHECK(g2.json()["results"]["location"] == "interior");
  CHECK(tetra_cmd({"member", "g2", "2", "1"}).code == kExitBoundary);
  CHECK(tetra_cmd({"member", "tetrablock", "0", "0.3", "0.5", "--psi-sup"}).json()["results"].contains("psi_sup"));

  const auto bad = tetra_cmd({"member", "tetrablock", "0", "zz", "0"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("zz") != std::string::npos);
  CHECK(tetra_cmd({"member", "tetrablock", "0", "0"}).code == kExitUsage);
  CHECK(tetra_cmd({"member", "disc", "0"}).code == kExitUsage);
  CHECK(tetra_cmd({"member", "tetrablock", "0", "0", "0", "--tol", "-1"}).code == kExitUsage);
  CHECK(tetra_cmd({}).code == kExitUsage);
  CHECK(tetra_cmd({"--help"}).code == kExitOk);
}

TEST_CASE("member honours --tol and TETRA_DEFAULT_TOL") {
  // e = 0.7 is boundary within 0.5.
  CHECK(tetra_cmd({"member", "tetrablock", "0", "0.3", "0.5", "--tol", "0.5"}).code == kExitBoundary);
  setenv("TETRA_DEFAULT_TOL", "0.5", 1);
  const auto env = tetra_cmd({"member", "tetrablock", "0", "0.3", "0.5"});
  CHECK(env.code == kExitBoundary);
  CHECK(env.json()["diagnostics"]["tolerance_used"]["raw"] == 0.5);
  CHECK(tetra_cmd({"member", "tetrablock", "0", "0.3", "0.5", "--tol", "1e-3"}).code == kExitOk);
  CHECK(tetra_cmd({"member", "tetrablock", "0", "0.3", "0.5", "--tol", "0"}).code == kExitUsage);
  setenv("TETRA_DEFAULT_TOL", "nonsense", 1);
  CHECK(tetra_cmd({"member", "tetrablock", "0", "0.3", "0.5"}).code == kExitUsage);
  unsetenv("TETRA_DEFAULT_TOL");
}

TEST_CASE("distance examples") {
  const auto sep = tetra_cmd({"distance", "0,0,-0.5", "0,0.05,-0.5"});
  REQUIRE(sep.code == kExitOk);
  const Json r = sep.json()["results"];
  // 0.1 / 1.45, 0.1 / sqrt(2) and 0.05 / 0.5.
  CHECK(std::abs(m_scale(r["p_e"]) - 0.1 / 1.45) < 1e-6);
  CHECK(m_scale(r["c_lower"]["distance"]) >= 0.1 / std::sqrt(2.0) - 1e-9);
  CHECK(std::abs(m_scale(r["k_upper"]["distance"]) - 0.1) < 1e-6);
  CHECK(std::abs(m_scale(r["closed_form"]) - 0.1) < 1e-15);
  CHECK(r["sandwich_violated"] == false);
  CHECK(labelled(sep.json(), ""));

  const Json same = tetra_cmd({"distance", "0.1,0.2,0", "0.1,0.2,0"}).json()["results"];
  CHECK(m_scale(same["p_e"]) == 0.0);
  CHECK(m_scale(same["c_lower"]["distance"]) == 0.0);
  CHECK(m_scale(same["k_upper"]["distance"]) == 0.0);

  // Product-set pair: both bounds equal the larger coordinate distance.
  const double expected = std::max(std::abs((0.2 - 0.4) / (1.0 - 0.08)), std::abs((0.3 - 0.1) / (1.0 - 0.03)));
  const Json product = tetra_cmd({"distance", "0.2,0.3,0.06", "0.4,0.1,0.04"}).json()["results"];
  CHECK(std::abs(m_scale(product["c_lower"]["distance"]) - expected) < 1e-9);
  CHECK(std::abs(m_scale(product["k_upper"]["distance"]) - expected) < 1e-6);
  CHECK(product["closed_form"].is_null());

  CHECK(tetra_cmd({"distance", "0,0,0", "0,0.7,0.5"}).code == kExitInvariant);
  CHECK(tetra_cmd({"distance", "0,0", "0,0,0"}).code == kExitUsage);
  CHECK(tetra_cmd({"distance", "0,0,0", "0,0.1,0", "--lower-families", "nope"}).code == kExitUsage);
  CHECK(tetra_cmd({"distance", "0,0,0", "0,0.1,0", "--upper-families", "nope"}).code == kExitUsage);
}

TEST_CASE("geodesic eval, verify and solve") {
  const auto e = tetra_cmd({"geodesic", "eval", "--domain", "tetrablock", "--C", "0", "--phi", "id",
                            "--omega1", "1", "--omega2", "1", "--lambda", "0.5"});
  REQUIRE(e.code == kExitOk);
  const Json point = e.json()["results"]["rows"][0]["point"]["raw"];
  CHECK(point[0][0] == 0.5);
  CHECK(point[1][0] == 0.5);
  CHECK(point[2][0] == 0.25);
  CHECK(labelled(e.json(), ""));

  const auto g = tetra_cmd({"geodesic", "eval", "--domain", "g2", "--C", "1", "--omega", "1", "--lambda", "0.4"});
  REQUIRE(g.code == kExitOk);
  const Json gp = g.json()["results"]["rows"][0]["point"]["raw"];
  CHECK(std::abs(gp[0][0].get<double>() + 0.8) < 1e-15);
  CHECK(std::abs(gp[1][0].get<double>() - 0.16) < 1e-15);

  CHECK(tetra_cmd({"geodesic", "eval", "--samples", "4"}).json()["results"]["rows"].size() == 36);

  const auto v = tetra_cmd({"geodesic", "verify", "--C", "0.3", "--phi", "through:0.6:0.8+0.6i", "--swapped"});
  CHECK(v.code == kExitOk);
  CHECK(v.json()["results"]["verdict"] == "geodesic_verified");
  CHECK(tetra_cmd({"geodesic", "verify", "--domain", "general", "--C", "0.3", "--phi", "const:0.1",
                   "--psi", "through:0.5"})
            .json()["results"]["verdict"] == "in_domain_only");
  CHECK(tetra_cmd({"geodesic", "verify", "--domain", "g2", "--C", "1.5", "--omega", "-1"}).code == kExitOk);

  // Invariant violations.
  CHECK(tetra_cmd({"geodesic", "verify", "--C", "0.3", "--phi", "id"}).code == kExitInvariant);
  CHECK(tetra_cmd({"geodesic", "eval", "--domain", "g2", "--C", "2.5"}).code == kExitInvariant);
  CHECK(tetra_cmd({"geodesic", "eval", "--omega1", "0.5"}).code == kExitInvariant);
  CHECK(tetra_cmd({"geodesic", "eval", "--lambda", "1.5"}).code == kExitInvariant);
  CHECK(tetra_cmd({"geodesic", "eval", "--phi", "wobble"}).code == kExitUsage);
  CHECK(tetra_cmd({"geodesic"}).code == kExitUsage);

  const auto s = tetra_cmd({"geodesic", "solve", "--point", "0.5,0.5,0.25", "--lambda", "0.5"});
  CHECK(s.code == kExitOk);
  CHECK(s.json()["results"]["found"] == true);
  CHECK(s.json()["results"]["params"]["C"]["raw"].get<double>() < 1e-8);
  CHECK(tetra_cmd({"geodesic", "solve", "--point", "0,0.7,0.5"}).code == kExitInvariant);
}

TEST_CASE("verify-paper reports suites and is deterministic") {
  const auto a = tetra_cmd({"verify-paper", "--suite", "prop5", "--json"});
  CHECK(a.code == kExitOk);
  const Json j = a.json();
  CHECK(j["results"]["passed"] == true);
  const Json metrics = j["results"]["suites"][0]["metrics"];
  CHECK(std::abs(m_scale(metrics["p_e"]) - 0.068966) < 1e-6);
  CHECK(std::abs(m_scale(metrics["magic_f_lower_bound"]) - 0.070711) < 1e-6);
  CHECK(labelled(j, ""));

  const auto r1 = tetra_cmd({"verify-paper", "--suite", "rho", "--seed", "9"});
  const auto r2 = tetra_cmd({"verify-paper", "--suite", "rho", "--seed", "9"});
  CHECK(r1.code == kExitOk);
  CHECK(r1.out == r2.out);
  CHECK(tetra_cmd({"verify-paper", "--suite", "rho", "--seed", "10"}).out != r1.out);
  CHECK(tetra_cmd({"verify-paper", "--suite", "boundary"}).code == kExitOk);
  CHECK(tetra_cmd({"verify-paper", "--suite", "nope"}).code == kExitUsage);
}

TEST_CASE("sweep writes deterministic tables") {
  const auto csv = tetra_cmd({"sweep", "p_e"});
  REQUIRE(csv.code == kExitOk);
  std::istringstream in(csv.out);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 20);
  CHECK(lines[0] == "c,closed_form_m_scale,lambda,magic_f_m_scale,p_e_m_scale,p_e_p_scale\r");
  // p_e agrees with its closed form on every row.
  for (std::size_t k = 1; k < lines.size(); ++k) {
    std::vector<double> cells;
    std::stringstream row(lines[k]);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(std::stod(cell));
    CHECK(std::abs(cells[4] - cells[1]) < 1e-9);
  }
  CHECK(tetra_cmd({"sweep", "p_e"}).out == csv.out);

  const auto empty = tetra_cmd({"sweep", "p_e", "--C", "0.5:0.4:0.1"});
  CHECK(empty.code == kExitOk);
  CHECK(empty.out == "c,closed_form_m_scale,lambda,magic_f_m_scale,p_e_m_scale,p_e_p_scale\r\n");

  const auto lines_json = tetra_cmd({"sweep", "p_e", "--out", "json", "--C", "0.5"});
  CHECK(Json::parse(lines_json.out)["c"] == 0.5);

  const auto k = tetra_cmd({"sweep", "k_upper", "--z", "0.1:0.3:0.1", "--w", "0.7:0.9:0.1", "--out", "json"});
  REQUIRE(k.code == kExitOk);
  std::istringstream kin(k.out);
  int rows = 0;
  for (std::string line; std::getline(kin, line); ++rows) CHECK(Json::parse(line)["equal"] == true);
  // Pairs with |z| + |w| >= 1 are left out.
  CHECK(rows == 3);

  CHECK(tetra_cmd({"sweep", "p_e", "--C", "0:1:0.5"}).code == kExitInvariant);
  CHECK(tetra_cmd({"sweep", "p_e", "--C", "0:1:0"}).code == kExitUsage);
  CHECK(tetra_cmd({"sweep", "rho"}).code == kExitUsage);
}

TEST_CASE("sweep output files and I/O errors") {
  const auto path = temp_file("sweep.csv");
  const auto written = tetra_cmd({"sweep", "p_e", "--output", path.string()});
  CHECK(written.code == kExitOk);
  CHECK(written.json()["results"]["rows"]["raw"] == 19);
  std::ifstream file(path, std::ios::binary);
  const std::string contents((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  CHECK(contents == tetra_cmd({"sweep", "p_e"}).out);
  std::filesystem::remove(path);

  const auto missing = tetra_cmd({"sweep", "p_e", "--output", "/nonexistent-dir/out.csv"});
  CHECK(missing.code == kExitIo);
  CHECK_FALSE(missing.err.empty());
}

TEST_CASE("--timing is the only source of run-dependent output") {
  const auto plain = tetra_cmd({"member", "tetrablock", "0", "0", "0"});
  CHECK_FALSE(plain.json()["diagnostics"].contains("runtime_seconds"));
  const auto timed = tetra_cmd({"--timing", "member", "tetrablock", "0", "0", "0"});
  CHECK(timed.json()["diagnostics"].contains("runtime_seconds"));
  CHECK(tetra_cmd({"member", "tetrablock", "0", "0", "0"}).out == plain.out);
}
