#include "tetra/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace tetra::cli {

namespace {

Json number(double value) { return std::isfinite(value) ? Json(value) : Json(nullptr); }

Json pair(Complex value) { return Json::array({number(value.real()), number(value.imag())}); }

}  // namespace

Json raw(double value) { return Json{{"raw", number(value)}}; }

Json raw(Complex value) { return Json{{"raw", pair(value)}}; }

Json raw(const std::vector<Complex>& values) {
  Json list = Json::array();
  for (const Complex v : values) list.push_back(pair(v));
  return Json{{"raw", list}};
}

Json raw_point(const Eigen::VectorXcd& point) {
  return raw(std::vector<Complex>(point.data(), point.data() + point.size()));
}

Json scaled(const HyperbolicDistance& distance) {
  return Json{{"m_scale", number(distance.m_scale)}, {"p_scale", number(distance.p_scale)}};
}

Json envelope(const std::string& command, Json inputs, Json results, Json diagnostics) {
  Json out;
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out["results"] = std::move(results);
  out["diagnostics"] = std::move(diagnostics);
  out["schema_version"] = kSchemaVersion;
  return out;
}

void write_json(std::ostream& out, const Json& document) { out << document.dump(2) << '\n'; }

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)), order_(columns_.size()) {
  std::iota(order_.begin(), order_.end(), 0);
  std::sort(order_.begin(), order_.end(),
            [&](std::size_t a, std::size_t b) { return columns_[a] < columns_[b]; });
}

void Table::add_row(std::vector<CsvCell> row) {
  if (row.size() != columns_.size()) throw std::logic_error("table row has the wrong width");
  rows_.push_back(std::move(row));
}

std::string csv_field(const CsvCell& cell) {
  if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
  if (const auto* d = std::get_if<double>(&cell)) {
    if (!std::isfinite(*d)) return std::isnan(*d) ? "nan" : (*d > 0 ? "inf" : "-inf");
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", *d);
    return buffer;
  }
  const auto& s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void Table::write_csv(std::ostream& out) const {
  for (std::size_t k = 0; k < order_.size(); ++k) {
    out << (k ? "," : "") << csv_field(columns_[order_[k]]);
  }
  out << "\r\n";
  for (const auto& row : rows_) {
    for (std::size_t k = 0; k < order_.size(); ++k) out << (k ? "," : "") << csv_field(row[order_[k]]);
    out << "\r\n";
  }
}

void Table::write_json_lines(std::ostream& out) const {
  for (const auto& row : rows_) {
    Json line = Json::object();
    for (const std::size_t k : order_) {
      std::visit(
          [&](const auto& value) {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, double>) {
              line[columns_[k]] = number(value);
            } else {
              line[columns_[k]] = value;
            }
          },
          row[k]);
    }
    out << line.dump() << '\n';
  }
}

}  // namespace tetra::cli
