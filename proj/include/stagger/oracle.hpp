#pragma once

// Dense, exact-rational construction and reduction of the cyclic system
//
//     [1 1 0 ... 0]         [2c_1]
//     [0 1 1 ... 0]         [2c_2]
//     [    ...    ]  e  =   [ ...]
//     [1 0 0 ... 1]         [2c_M]
//
// This is the verification path: it shares nothing with the O(M)
// recurrence in grid.hpp beyond the field types.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stagger/grid.hpp"
#include "stagger/scalar.hpp"

namespace stagger {

inline constexpr std::size_t oracle_max_unknowns = 64;

struct DenseSystem {
  std::size_t m = 0;
  std::vector<int> matrix;  // row-major m x m
  std::vector<Rational> rhs;

  int at(std::size_t row, std::size_t col) const { return matrix[row * m + col]; }
};

struct EchelonResult {
  std::size_t m = 0;
  std::vector<Rational> reduced_matrix;  // row-major m x m
  std::vector<Rational> reduced_rhs;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;  // 0-based

  const Rational& at(std::size_t row, std::size_t col) const { return reduced_matrix[row * m + col]; }
};

namespace detail {

inline DenseSystem cyclic_pattern(std::size_t m, std::size_t max_unknowns) {
  if (m == 0) throw std::invalid_argument("dense system needs at least one unknown");
  if (m > max_unknowns) {
    throw std::invalid_argument("dense oracle is capped at " + std::to_string(max_unknowns) +
                                " unknowns, got " + std::to_string(m));
  }
  DenseSystem sys;
  sys.m = m;
  sys.matrix.assign(m * m, 0);
  sys.rhs.assign(m, Rational(0));
  if (m == 1) {
    // e_1 is its own periodic neighbour: 2 e_1 = 2 c_1.
    sys.matrix[0] = 2;
    return sys;
  }
  for (std::size_t r = 0; r < m; ++r) {
    sys.matrix[r * m + r] = 1;
    sys.matrix[r * m + (r + 1) % m] = 1;
  }
  return sys;
}

}  // namespace detail

// Matrix only, zero right-hand side.
inline DenseSystem build_system(const PeriodicStagger1D& grid,
                                std::size_t max_unknowns = oracle_max_unknowns) {
  return detail::cyclic_pattern(grid.n_unknowns(), max_unknowns);
}

// Floating centers are converted to rationals exactly.
template <class T>
DenseSystem build_system(const CenterField1D<T>& centers,
                         std::size_t max_unknowns = oracle_max_unknowns) {
  DenseSystem sys = detail::cyclic_pattern(centers.size(), max_unknowns);
  for (std::size_t i = 0; i < sys.m; ++i) sys.rhs[i] = Rational(centers[i]) * 2;
  return sys;
}

// Bareiss fraction-free elimination; every intermediate stays an integer.
inline BigInt determinant_exact(const DenseSystem& sys) {
  const std::size_t m = sys.m;
  std::vector<BigInt> a(sys.matrix.begin(), sys.matrix.end());
  auto A = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * m + c]; };
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (A(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < m && A(swap_row, k) == 0) ++swap_row;
      if (swap_row == m) return 0;
      for (std::size_t c = 0; c < m; ++c) std::swap(A(k, c), A(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
      }
      A(i, k) = 0;
    }
    prev = A(k, k);
  }
  return sign * A(m - 1, m - 1);
}

// Forward elimination in natural pivot order with no row scaling, so the
// reduced form keeps the unit bidiagonal rows and the last row becomes
// row_M - row_1 + row_2 - ... + (-1)^{M-1} row_{M-1}. Its corner is
// 1 - (-1)^M. Its rhs is 2 S (S the alternating residual) for even M and
// 2 (2 c_M - S) for odd M.
inline EchelonResult row_echelon(const DenseSystem& sys) {
  const std::size_t m = sys.m;
  EchelonResult out;
  out.m = m;
  out.reduced_matrix.assign(sys.matrix.begin(), sys.matrix.end());
  out.reduced_rhs = sys.rhs;
  auto A = [&](std::size_t r, std::size_t c) -> Rational& { return out.reduced_matrix[r * m + c]; };

  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < m; ++col) {
    std::size_t pivot = row;
    while (pivot < m && A(pivot, col) == 0) ++pivot;
    if (pivot == m) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m; ++c) std::swap(A(row, c), A(pivot, c));
      std::swap(out.reduced_rhs[row], out.reduced_rhs[pivot]);
    }
    for (std::size_t i = row + 1; i < m; ++i) {
      if (A(i, col) == 0) continue;
      const Rational factor = A(i, col) / A(row, col);
      for (std::size_t c = col; c < m; ++c) A(i, c) -= factor * A(row, c);
      out.reduced_rhs[i] -= factor * out.reduced_rhs[row];
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

// Rouche-Capelli on the echelon form. For rank M-1 the free variable is set
// to 0 for the particular solution and to 1 for the kernel vector.
inline SolveOutcome<Rational> solve_dense(const DenseSystem& sys) {
  const EchelonResult ech = row_echelon(sys);
  const std::size_t m = ech.m;
  const PeriodicStagger1D grid = PeriodicStagger1D::from_unknowns(m);

  for (std::size_t r = ech.rank; r < m; ++r) {
    if (ech.reduced_rhs[r] != 0) return Inconsistent<Rational>{grid, ech.reduced_rhs[r]};
  }
  if (m - ech.rank > 1) throw std::logic_error("kernel dimension above one is not expected");

  std::optional<std::size_t> free_col;
  {
    std::vector<bool> is_pivot(m, false);
    for (std::size_t c : ech.pivot_columns) is_pivot[c] = true;
    for (std::size_t c = 0; c < m; ++c)
      if (!is_pivot[c]) free_col = c;
  }

  auto back_substitute = [&](bool homogeneous, const Rational& free_value) {
    std::vector<Rational> x(m, Rational(0));
    if (free_col) x[*free_col] = free_value;
    for (std::size_t r = ech.rank; r-- > 0;) {
      const std::size_t pc = ech.pivot_columns[r];
      Rational acc = homogeneous ? Rational(0) : ech.reduced_rhs[r];
      for (std::size_t c = pc + 1; c < m; ++c) acc -= ech.at(r, c) * x[c];
      x[pc] = acc / ech.at(r, pc);
    }
    return x;
  };

  if (!free_col) return Unique<Rational>{EdgeField1D<Rational>(grid, back_substitute(false, 0))};
  return Family<Rational>{EdgeField1D<Rational>(grid, back_substitute(false, 0)),
                          back_substitute(true, 1)};
}

}  // namespace stagger
