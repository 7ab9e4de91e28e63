#pragma once

// Test-only reference computations that do not go through the library's
// solvers: brute-force determinants, the N = 5 closed form, direct
// averaging, and random instance generators.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "stagger/scalar.hpp"

namespace stagger::reference {

// Leibniz expansion over all permutations. Only for small m.
inline long long leibniz_determinant(const std::vector<int>& a, std::size_t m) {
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  long long det = 0;
  do {
    long long term = 1;
    for (std::size_t r = 0; r < m && term != 0; ++r) term *= a[r * m + perm[r]];
    if (term == 0) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    det += inversions % 2 == 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// The cyclic 0/1 pattern written out by hand, M >= 2.
inline std::vector<int> cyclic_matrix(std::size_t m) {
  std::vector<int> a(m * m, 0);
  for (std::size_t r = 0; r < m; ++r) {
    a[r * m + r] += 1;
    a[r * m + (r + 1) % m] += 1;
  }
  return a;
}

template <class T>
std::vector<T> closed_form_n5(const std::vector<T>& c) {
  return {c[0] - c[1] + c[2], c[0] + c[1] - c[2], -c[0] + c[1] + c[2]};
}

// c_i = (e_i + e_{i+1}) / 2 with e_{M+1} = e_1.
template <class T>
std::vector<T> average_periodic(const std::vector<T>& e) {
  std::vector<T> c(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const T next = i + 1 < e.size() ? e[i + 1] : e[0];
    c[i] = (e[i] + next) / T(2);
  }
  return c;
}

inline std::vector<double> random_reals(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                        double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

inline std::vector<Rational> random_rationals(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long long> num(-1000, 1000);
  std::uniform_int_distribution<long long> den(1, 97);
  std::vector<Rational> v(n);
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return v;
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// max_i |a_i - b_i| / max_i |b_i|, or the absolute error when b is zero.
inline double relative_error(const std::vector<double>& a, const std::vector<double>& b) {
  double err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
  const double scale = max_abs(b);
  return scale > 0.0 ? err / scale : err;
}

template <class T>
std::vector<T> to_vector(auto span) {
  return std::vector<T>(span.begin(), span.end());
}

}  // namespace stagger::reference
