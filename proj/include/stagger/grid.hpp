#pragma once

// One-dimensional periodic staggered grid.
//
// N edge points e_1..e_N carry the periodic images e_{N-1} = e_1 and
// e_N = e_2, and the N-1 centers carry c_{N-1} = c_1. What remains is
// M = N-2 unique edge values and M unique center values, tied together by
//
//     e_i + e_{i+1} = 2 c_i,   i = 1..M,   e_{M+1} := e_1.
//
// The cyclic system is invertible exactly when M is odd. For even M it has
// a one-dimensional kernel spanned by (+1,-1,+1,...) and is solvable only
// when the alternating sum of the centers vanishes.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "stagger/errors.hpp"
#include "stagger/scalar.hpp"

namespace stagger {

inline constexpr double default_tolerance = 1e-10;

enum class Parity { odd, even };
enum class OutcomeClass { always_unique, consistent_dependent };

inline const char* to_string(Parity p) noexcept { return p == Parity::odd ? "odd" : "even"; }

inline const char* to_string(OutcomeClass c) noexcept {
  return c == OutcomeClass::always_unique ? "always-unique" : "consistent-dependent";
}

class PeriodicStagger1D {
 public:
  explicit PeriodicStagger1D(std::size_t n_edges) : n_edges_(n_edges) {
    if (n_edges < 3) {
      throw std::invalid_argument("periodic staggered grid needs at least 3 edge points, got " +
                                  std::to_string(n_edges));
    }
  }

  static PeriodicStagger1D from_unknowns(std::size_t m) {
    if (m == 0) throw std::invalid_argument("periodic staggered grid needs at least one unknown");
    return PeriodicStagger1D(m + 2);
  }

  std::size_t n_edges() const noexcept { return n_edges_; }
  std::size_t n_unknowns() const noexcept { return n_edges_ - 2; }
  std::size_t n_centers() const noexcept { return n_edges_ - 2; }

  // N and M = N-2 share parity.
  Parity parity() const noexcept { return n_edges_ % 2 == 1 ? Parity::odd : Parity::even; }
  bool is_odd() const noexcept { return parity() == Parity::odd; }

  friend bool operator==(const PeriodicStagger1D&, const PeriodicStagger1D&) = default;

 private:
  std::size_t n_edges_;
};

struct at_centers {};
struct at_edges {};

// M samples living either at the unique centers or at the unique edges of a
// grid. Periodic images are never stored.
template <class T, class Location>
class StaggerField1D {
 public:
  using value_type = T;

  StaggerField1D(PeriodicStagger1D grid, std::vector<T> values)
      : grid_(grid), values_(std::move(values)) {
    validate();
  }

  // Grid deduced from the sample count: N = size + 2.
  explicit StaggerField1D(std::vector<T> values)
      : grid_(PeriodicStagger1D::from_unknowns(values.size())), values_(std::move(values)) {
    validate();
  }

  const PeriodicStagger1D& grid() const noexcept { return grid_; }
  std::span<const T> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const T& operator[](std::size_t i) const { return values_[i]; }

  // Full edge array of length N: (e_1, ..., e_M, e_1, e_2).
  std::vector<T> periodic_values() const
    requires std::same_as<Location, at_edges>
  {
    std::vector<T> out(values_);
    out.push_back(values_[0]);
    out.push_back(values_.size() > 1 ? values_[1] : values_[0]);
    return out;
  }

  friend bool operator==(const StaggerField1D&, const StaggerField1D&) = default;

 private:
  void validate() const {
    if (values_.size() != grid_.n_unknowns()) {
      throw std::invalid_argument("field has " + std::to_string(values_.size()) +
                                  " values but the grid has " +
                                  std::to_string(grid_.n_unknowns()) + " unknowns");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!scalar_traits<T>::finite(values_[i])) {
        throw std::invalid_argument("non-finite value at index " + std::to_string(i));
      }
    }
  }

  PeriodicStagger1D grid_;
  std::vector<T> values_;
};

template <class T>
using CenterField1D = StaggerField1D<T, at_centers>;
template <class T>
using EdgeField1D = StaggerField1D<T, at_edges>;

template <class T>
struct Unique {
  EdgeField1D<T> edges;
};

// Every member of the solution set is particular + t * null_direction.
template <class T>
struct Family {
  EdgeField1D<T> particular;
  std::vector<T> null_direction;

  EdgeField1D<T> member(const T& t) const {
    std::vector<T> v(particular.values().begin(), particular.values().end());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += t * null_direction[i];
    return EdgeField1D<T>(particular.grid(), std::move(v));
  }
};

template <class T>
struct Inconsistent {
  PeriodicStagger1D grid;
  T residual;  // 2 * alternating sum of the centers
};

enum class OutcomeKind { unique, family, inconsistent };

inline const char* to_string(OutcomeKind k) noexcept {
  switch (k) {
    case OutcomeKind::unique: return "unique";
    case OutcomeKind::family: return "family";
    case OutcomeKind::inconsistent: return "inconsistent";
  }
  return "?";
}

template <class T>
class SolveOutcome {
 public:
  SolveOutcome(Unique<T> u) : v_(std::move(u)) {
    if (!std::get<Unique<T>>(v_).edges.grid().is_odd()) {
      throw std::logic_error("unique outcome on an even grid");
    }
  }

  SolveOutcome(Family<T> f) : v_(std::move(f)) {
    const auto& fam = std::get<Family<T>>(v_);
    if (fam.particular.grid().is_odd()) throw std::logic_error("family outcome on an odd grid");
    const auto& d = fam.null_direction;
    if (d.size() != fam.particular.size()) {
      throw std::logic_error("null direction length does not match the grid");
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (magnitude(d[i]) != T(1) || (i > 0 && d[i] != -d[i - 1])) {
        throw std::logic_error("null direction is not an alternating unit pattern");
      }
    }
  }

  SolveOutcome(Inconsistent<T> x) : v_(std::move(x)) {
    if (std::get<Inconsistent<T>>(v_).grid.is_odd()) {
      throw std::logic_error("inconsistent outcome on an odd grid");
    }
  }

  OutcomeKind kind() const noexcept { return static_cast<OutcomeKind>(v_.index()); }
  bool is_unique() const noexcept { return kind() == OutcomeKind::unique; }
  bool is_family() const noexcept { return kind() == OutcomeKind::family; }
  bool is_inconsistent() const noexcept { return kind() == OutcomeKind::inconsistent; }

  const Unique<T>& unique() const { return std::get<Unique<T>>(v_); }
  const Family<T>& family() const { return std::get<Family<T>>(v_); }
  const Inconsistent<T>& inconsistent() const { return std::get<Inconsistent<T>>(v_); }

  const std::variant<Unique<T>, Family<T>, Inconsistent<T>>& variant() const noexcept { return v_; }

 private:
  std::variant<Unique<T>, Family<T>, Inconsistent<T>> v_;
};

struct SolvabilityReport {
  std::size_t n_edges;
  std::size_t n_unknowns;
  Parity parity;
  int determinant;
  std::size_t rank;
  OutcomeClass outcome_class;
};

// det(I + P) = 1 - (-1)^M for the cyclic shift P; the M = 1 row (2) follows
// the same formula.
inline SolvabilityReport classify(const PeriodicStagger1D& grid) {
  const std::size_t m = grid.n_unknowns();
  const bool odd = grid.is_odd();
  return SolvabilityReport{grid.n_edges(),
                           m,
                           grid.parity(),
                           odd ? 2 : 0,
                           odd ? m : m - 1,
                           odd ? OutcomeClass::always_unique : OutcomeClass::consistent_dependent};
}

namespace detail {

// sum_{i=1}^{M} (-1)^{M-i} c_i. Floating input uses Neumaier compensation so
// that the even-grid consistency test does not degrade with M.
template <class T>
T alternating_sum(std::span<const T> c) {
  const std::size_t m = c.size();
  if constexpr (is_exact_v<T>) {
    T s(0);
    for (std::size_t i = 0; i < m; ++i) {
      if ((m - 1 - i) % 2 == 0) s += c[i];
      else s -= c[i];
    }
    return s;
  } else {
    T s = 0, comp = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const T term = (m - 1 - i) % 2 == 0 ? c[i] : -c[i];
      const T t = s + term;
      if (std::abs(s) >= std::abs(term)) comp += (s - t) + term;
      else comp += (term - t) + s;
      s = t;
    }
    return s + comp;
  }
}

template <class T>
bool consistent(const T& twice_residual, std::span<const T> c, double tolerance) {
  if constexpr (is_exact_v<T>) {
    return twice_residual == 0;
  } else {
    T scale = 1;
    for (const T& v : c) scale = std::max(scale, std::abs(v));
    return std::abs(twice_residual) <= static_cast<T>(tolerance) * scale;
  }
}

// e_{i+1} = 2 c_i - e_i starting from e_1 = first.
template <class T>
std::vector<T> forward_recurrence(std::span<const T> c, T first) {
  std::vector<T> e(c.size());
  e[0] = std::move(first);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) e[i + 1] = T(2) * c[i] - e[i];
  return e;
}

inline void check_tolerance(double tolerance) {
  if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
}

}  // namespace detail

template <class T>
CenterField1D<T> centers_from_edges(const EdgeField1D<T>& edges) {
  const auto e = edges.values();
  const std::size_t m = e.size();
  std::vector<T> c(m);
  for (std::size_t i = 0; i < m; ++i) c[i] = (e[i] + e[(i + 1) % m]) / T(2);
  return CenterField1D<T>(edges.grid(), std::move(c));
}

// For odd M this is e_1 of the unique solution; for even M the data is
// consistent iff it vanishes.
template <class T>
T alternating_residual(const CenterField1D<T>& centers) {
  return detail::alternating_sum(centers.values());
}

template <class T>
SolveOutcome<T> edges_from_centers(const CenterField1D<T>& centers,
                                   double tolerance = default_tolerance) {
  detail::check_tolerance(tolerance);
  const auto c = centers.values();
  const std::size_t m = c.size();
  const T s = detail::alternating_sum(c);

  if (centers.grid().is_odd()) {
    std::vector<T> e = detail::forward_recurrence(c, s);
    if constexpr (!is_exact_v<T>) {
      // One refinement sweep on the wrap equation e_M + e_1 = 2 c_M. Adding
      // (+d,-d,+d,...) leaves every interior equation intact.
      const T half_gap = (T(2) * c[m - 1] - e[m - 1] - e[0]) / T(2);
      if (half_gap != T(0)) {
        for (std::size_t i = 0; i < m; ++i) e[i] += i % 2 == 0 ? half_gap : -half_gap;
      }
    }
    return Unique<T>{EdgeField1D<T>(centers.grid(), std::move(e))};
  }

  const T twice = T(2) * s;
  if (!detail::consistent(twice, c, tolerance)) {
    return Inconsistent<T>{centers.grid(), twice};
  }
  std::vector<T> null(m);
  for (std::size_t i = 0; i < m; ++i) null[i] = i % 2 == 0 ? T(1) : T(-1);
  return Family<T>{EdgeField1D<T>(centers.grid(), detail::forward_recurrence(c, T(0))),
                   std::move(null)};
}

// Family member of least Euclidean norm: particular + t* d with
// t* = -<particular, d> / M, since <d, d> = M.
template <class T>
EdgeField1D<T> complete_min_norm(const SolveOutcome<T>& outcome) {
  if (!outcome.is_family()) {
    throw std::invalid_argument(std::string("min-norm completion needs a family outcome, got ") +
                                to_string(outcome.kind()));
  }
  const auto& fam = outcome.family();
  const auto p = fam.particular.values();
  T dot(0);
  for (std::size_t i = 0; i < p.size(); ++i) dot += p[i] * fam.null_direction[i];
  return fam.member(-dot / T(static_cast<long long>(p.size())));
}

// Family member with e_{pin_index} = pin_value; pin_index counts edges from 1.
template <class T>
EdgeField1D<T> complete_pinned(const CenterField1D<T>& centers, std::size_t pin_index,
                               const std::type_identity_t<T>& pin_value,
                               double tolerance = default_tolerance) {
  if (centers.grid().is_odd()) {
    throw parity_error("pinning needs an even number of edge points; N = " +
                       std::to_string(centers.grid().n_edges()) + " has a unique solution");
  }
  if (pin_index < 1 || pin_index > centers.size()) {
    throw std::out_of_range("pin index " + std::to_string(pin_index) + " outside 1.." +
                            std::to_string(centers.size()));
  }
  if (!scalar_traits<T>::finite(pin_value)) throw std::invalid_argument("non-finite pin value");
  const SolveOutcome<T> outcome = edges_from_centers(centers, tolerance);
  if (outcome.is_inconsistent()) {
    const double r = scalar_traits<T>::to_double(outcome.inconsistent().residual);
    throw inconsistent_error("centers are inconsistent, residual " + std::to_string(r), r);
  }
  const auto& fam = outcome.family();
  const std::size_t k = pin_index - 1;
  const T t = (pin_value - fam.particular[k]) / fam.null_direction[k];
  return fam.member(t);
}

}  // namespace stagger
