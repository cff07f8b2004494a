#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "tetra/domains.hpp"
#include "tetra/hyperbolic.hpp"

namespace tetra::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"raw": value}; non-finite values become null.
Json raw(double value);
/// {"raw": [re, im]}.
Json raw(Complex value);
/// {"raw": [[re, im], ...]}.
Json raw(const std::vector<Complex>& values);
Json raw_point(const Eigen::VectorXcd& point);
/// {"m_scale": m, "p_scale": p}.
Json scaled(const HyperbolicDistance& distance);

/// {command, inputs, results, diagnostics, schema_version}.
Json envelope(const std::string& command, Json inputs, Json results, Json diagnostics);

/// Two-space indented dump followed by a newline.
void write_json(std::ostream& out, const Json& document);

using CsvCell = std::variant<double, bool, std::string>;

/// A table whose columns are written in alphabetical order.
class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  void add_row(std::vector<CsvCell> row);

  /// RFC 4180: CRLF line ends, fields quoted when they hold ',', '"', CR or LF.
  /// Reals use 17 significant digits.
  void write_csv(std::ostream& out) const;
  /// One JSON object per line with alphabetically ordered keys.
  void write_json_lines(std::ostream& out) const;

  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> columns_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<CsvCell>> rows_;
};

std::string csv_field(const CsvCell& cell);

}  // namespace tetra::cli
