#include <string>

#include "doctest.h"
#include "tetra/hyperbolic.hpp"
#include "tetra/verification.hpp"

using namespace tetra;

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 10);
  for (const auto& name : suite_names()) CHECK(is_suite(name));
  CHECK_FALSE(is_suite("all"));
  CHECK_THROWS_AS(run_suite("nope"), PreconditionError);
}

TEST_CASE("light suites pass and report labelled metrics") {
  for (const char* name : {"prop5", "rho", "transport", "g2"}) {
    const SuiteReport report = run_suite(name, 4);
    CHECK(report.name == name);
    CHECK(report.passed);
    CHECK(report.failures.empty());
    CHECK(report.samples > 0);
    REQUIRE_FALSE(report.metrics.empty());
    for (const auto& m : report.metrics) {
      CHECK((m.scale == "raw" || m.scale == "m_scale" || m.scale == "p_scale"));
    }
  }
}

TEST_CASE("suites are reproducible from the seed") {
  const auto value = [](std::uint64_t seed) { return run_suite("rho", seed).metrics.at(0).value; };
  CHECK(value(7) == value(7));
  CHECK(value(7) != value(8));
}
