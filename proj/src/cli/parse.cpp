#include "tetra/cli/parse.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "tetra/geodesics.hpp"

namespace tetra::cli {

namespace {

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const auto end = text.find(separator, begin);
    parts.push_back(text.substr(begin, end - begin));
    if (end == std::string_view::npos) return parts;
    begin = end + 1;
  }
}

bool read_double(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto [end, error] = std::from_chars(text.data(), text.data() + text.size(), out);
  return error == std::errc() && end == text.data() + text.size() && std::isfinite(out);
}

}  // namespace

double parse_real(std::string_view text) {
  double value = 0.0;
  if (!read_double(trim(text), value)) throw ParseError("not a real number: '" + std::string(text) + "'");
  return value;
}

Complex parse_complex(std::string_view text) {
  const std::string_view t = trim(text);
  const auto fail = [&]() { return ParseError("not a complex literal: '" + std::string(text) + "'"); };
  if (t.empty()) throw fail();
  if (t.back() != 'i') {
    double re = 0.0;
    if (!read_double(t, re)) throw fail();
    return {re, 0.0};
  }
  const std::string_view body = t.substr(0, t.size() - 1);
  // The imaginary part starts at the last sign that is not leading or an exponent sign.
  std::size_t split_at = 0;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  const std::string_view re_text = body.substr(0, split_at);
  std::string_view im_text = body.substr(split_at);
  double re = 0.0;
  if (!re_text.empty() && !read_double(re_text, re)) throw fail();
  double im = 0.0;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else if (!read_double(im_text, im)) {
    throw fail();
  }
  return {re, im};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  for (const auto part : split(text, ',')) out.push_back(parse_complex(part));
  return out;
}

std::vector<double> parse_range(std::string_view text) {
  const auto parts = split(trim(text), ':');
  if (parts.size() == 1) return {parse_real(parts[0])};
  if (parts.size() != 3) throw ParseError("range must be start:stop:step: '" + std::string(text) + "'");
  const double start = parse_real(parts[0]);
  const double stop = parse_real(parts[1]);
  const double step = parse_real(parts[2]);
  if (!(step > 0.0)) throw ParseError("range step must be positive: '" + std::string(text) + "'");
  std::vector<double> out;
  if (start > stop) return out;
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  for (long k = 0; k < count; ++k) out.push_back(start + static_cast<double>(k) * step);
  return out;
}

BlaschkeMap parse_self_map(std::string_view text, double C) {
  const auto parts = split(trim(text), ':');
  const std::string_view kind = parts[0];
  const auto fail = [&](const char* why) {
    return ParseError(std::string(why) + ": '" + std::string(text) + "'");
  };
  std::vector<Complex> zeros;
  const auto zeros_from = [&](std::size_t first) {
    for (std::size_t k = first; k < parts.size(); ++k) zeros.push_back(parse_complex(parts[k]));
  };
  if (kind == "id") {
    if (parts.size() != 1) throw fail("id takes no arguments");
    return BlaschkeMap::identity();
  }
  if (kind == "const") {
    if (parts.size() != 2) throw fail("const takes one value");
    return BlaschkeMap::constant(parse_complex(parts[1]));
  }
  if (kind == "auto") {
    if (parts.size() != 2 && parts.size() != 3) throw fail("auto takes a point and an optional rotation");
    const Complex omega = parts.size() == 3 ? parse_complex(parts[2]) : Complex(1.0, 0.0);
    return BlaschkeMap::automorphism(parse_complex(parts[1]), omega);
  }
  if (kind == "through") {
    if (parts.size() < 2) throw fail("through needs a scale");
    const Complex unimodular = parts.size() >= 3 ? parse_complex(parts[2]) : Complex(1.0, 0.0);
    zeros_from(3);
    return phi_through(C, parse_real(parts[1]), unimodular, zeros);
  }
  if (kind == "blaschke") {
    if (parts.size() < 4) throw fail("blaschke needs unimodular:scale:shift");
    zeros_from(4);
    return BlaschkeMap(parse_complex(parts[1]), zeros, parse_real(parts[2]), parse_complex(parts[3]));
  }
  throw fail("unknown self-map");
}

std::string format_complex(Complex value) {
  char buffer[64];
  if (value.imag() == 0.0) {
    std::snprintf(buffer, sizeof buffer, "%.17g", value.real());
  } else {
    std::snprintf(buffer, sizeof buffer, "%.17g%+.17gi", value.real(), value.imag());
  }
  return buffer;
}

}  // namespace tetra::cli
