#pragma once

// Text field files:
//
//     stagger-field 1
//     dims 2
//     shape 3 4
//     staggered-axis none        (or an axis index)
//     count 12
//     <values, one row of the last axis per line>
//
// Values are written in the shortest decimal form that reads back to the
// same double.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "stagger/errors.hpp"
#include "stagger/nd_apply.hpp"

namespace stagger {

inline constexpr const char* field_magic = "stagger-field";
inline constexpr int field_version = 1;

inline std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline void write_field(std::ostream& os, const FieldND<double>& field) {
  const auto shape = field.shape();
  os << field_magic << ' ' << field_version << '\n';
  os << "dims " << shape.size() << '\n';
  os << "shape";
  for (std::size_t e : shape) os << ' ' << e;
  os << '\n';
  os << "staggered-axis ";
  if (field.staggered_axis()) os << *field.staggered_axis();
  else os << "none";
  os << '\n';
  os << "count " << field.size() << '\n';
  const std::size_t row = shape.back();
  const auto v = field.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << format_number(v[i]) << (i % row + 1 == row ? '\n' : ' ');
  }
}

namespace detail {

class TokenReader {
 public:
  explicit TokenReader(std::istream& is) : is_(is) {}

  std::string next(const char* what) {
    std::string tok;
    if (!(is_ >> tok)) throw parse_error(std::string("unexpected end of file, expected ") + what);
    return tok;
  }

  void expect(const char* keyword) {
    const std::string tok = next(keyword);
    if (tok != keyword) throw parse_error("expected '" + std::string(keyword) + "', found '" + tok + "'");
  }

  std::size_t size(const char* what) {
    const std::string tok = next(what);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw parse_error(std::string("bad ") + what + " '" + tok + "'");
    }
    return v;
  }

  double real(std::size_t index) {
    const std::string tok = next("value");
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw parse_error("bad value '" + tok + "' at position " + std::to_string(index));
    }
    if (!std::isfinite(v)) throw parse_error("non-finite value at position " + std::to_string(index));
    return v;
  }

  bool at_end() {
    std::string tok;
    return !(is_ >> tok);
  }

 private:
  std::istream& is_;
};

}  // namespace detail

inline FieldND<double> read_field(std::istream& is) {
  detail::TokenReader in(is);
  in.expect(field_magic);
  if (const std::size_t version = in.size("version"); version != field_version) {
    throw parse_error("unsupported field file version " + std::to_string(version));
  }
  in.expect("dims");
  const std::size_t dims = in.size("dimension count");
  if (dims == 0) throw parse_error("dims must be positive");
  in.expect("shape");
  std::vector<std::size_t> shape(dims);
  std::size_t product = 1;
  for (auto& e : shape) {
    e = in.size("extent");
    if (e == 0) throw parse_error("extents must be positive");
    product *= e;
  }
  in.expect("staggered-axis");
  std::optional<std::size_t> staggered;
  {
    std::string tok = in.next("staggered axis");
    if (tok != "none") {
      std::size_t axis = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), axis);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || axis >= dims) {
        throw parse_error("bad staggered axis '" + tok + "'");
      }
      staggered = axis;
    }
  }
  in.expect("count");
  const std::size_t count = in.size("value count");
  if (count != product) {
    throw parse_error("count " + std::to_string(count) + " does not match shape product " +
                      std::to_string(product));
  }
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = in.real(i);
  if (!in.at_end()) throw parse_error("trailing data after " + std::to_string(count) + " values");
  return FieldND<double>(std::move(shape), std::move(values), staggered);
}

inline FieldND<double> read_field_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw parse_error("cannot open '" + path + "'");
  return read_field(is);
}

inline void write_field_file(const std::string& path, const FieldND<double>& field) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
  write_field(os, field);
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace stagger
