#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tetra {

/// A reported quantity with its scale label: "m_scale", "p_scale" or "raw".
struct SuiteMetric {
  std::string name;
  double value = 0.0;
  std::string scale = "raw";
};

struct SuiteReport {
  std::string name;
  bool passed = false;
  long samples = 0;
  std::vector<SuiteMetric> metrics;
  std::vector<std::string> failures;
};

/// boundary, inclusion, certificate, prop41, prop5, necessary, g2, membership, rho,
/// transport.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Runs one named suite. Random samples are drawn from a generator seeded with `seed`,
/// so reports are reproducible. Throws PreconditionError for unknown names.
SuiteReport run_suite(std::string_view name, std::uint64_t seed = 0);

}  // namespace tetra
