#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tetra/hyperbolic.hpp"

namespace tetra::cli {

/// Malformed command-line text. Maps to exit code 64.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `a`, `a+bi`, `a-bi`, `bi`, `i` and `-i`, with decimal or exponent notation.
Complex parse_complex(std::string_view text);

/// Comma-separated complex literals.
std::vector<Complex> parse_complex_list(std::string_view text);

/// Inclusive real grid `start:stop:step`, or a single value. `step` must be positive;
/// `start > stop` is the empty grid.
std::vector<double> parse_range(std::string_view text);

double parse_real(std::string_view text);

/// Disc self-map specification:
///   id
///   const:<c>
///   auto:<a>[:<omega>]
///   through:<scale>[:<unimodular>[:<zero>...]]   phi(0) = -C for the given C
///   blaschke:<unimodular>:<scale>:<shift>[:<zero>...]
/// `C` is used only by `through`.
BlaschkeMap parse_self_map(std::string_view text, double C);

/// Shortest text that parse_complex reads back exactly.
std::string format_complex(Complex value);

}  // namespace tetra::cli
