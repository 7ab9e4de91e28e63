#pragma once

#include <cmath>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace stagger {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Scalars the transforms can be instantiated with. Exact scalars skip the
// tolerance-based consistency test and compare residuals against zero.
template <class T>
struct scalar_traits {
  static_assert(std::is_floating_point_v<T>, "unsupported scalar type");
  static constexpr bool exact = false;
  static bool finite(T v) noexcept { return std::isfinite(v); }
  static double to_double(T v) noexcept { return static_cast<double>(v); }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static bool finite(const Rational&) noexcept { return true; }
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
};

template <class T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

template <class T>
T magnitude(const T& v) {
  using std::abs;
  using boost::multiprecision::abs;
  return abs(v);
}

}  // namespace stagger
