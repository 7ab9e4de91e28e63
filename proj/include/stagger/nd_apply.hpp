#pragma once

// Applies the 1D periodic transforms along one axis of a row-major field.
// Each line along the axis is gathered into contiguous scratch storage,
// solved on its own, and scattered back.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stagger/errors.hpp"
#include "stagger/grid.hpp"

namespace stagger {

template <class T = double>
class FieldND {
 public:
  FieldND(std::vector<std::size_t> shape, std::vector<T> values,
          std::optional<std::size_t> staggered_axis = std::nullopt)
      : shape_(std::move(shape)), values_(std::move(values)), staggered_axis_(staggered_axis) {
    if (shape_.empty()) throw std::invalid_argument("field needs at least one axis");
    std::size_t count = 1;
    for (std::size_t extent : shape_) {
      if (extent == 0) throw std::invalid_argument("field extents must be positive");
      count *= extent;
    }
    if (count != values_.size()) {
      throw std::invalid_argument("shape holds " + std::to_string(count) + " values but " +
                                  std::to_string(values_.size()) + " were given");
    }
    if (staggered_axis_ && *staggered_axis_ >= shape_.size()) {
      throw std::invalid_argument("staggered axis " + std::to_string(*staggered_axis_) +
                                  " out of range");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!scalar_traits<T>::finite(values_[i])) {
        throw std::invalid_argument("non-finite value at flat index " + std::to_string(i));
      }
    }
  }

  std::span<const std::size_t> shape() const noexcept { return shape_; }
  std::span<const T> values() const noexcept { return values_; }
  std::optional<std::size_t> staggered_axis() const noexcept { return staggered_axis_; }
  std::size_t dims() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return values_.size(); }

  std::size_t offset(std::span<const std::size_t> index) const {
    if (index.size() != shape_.size()) throw std::invalid_argument("index rank mismatch");
    std::size_t off = 0;
    for (std::size_t a = 0; a < shape_.size(); ++a) {
      if (index[a] >= shape_[a]) throw std::out_of_range("index out of range");
      off = off * shape_[a] + index[a];
    }
    return off;
  }

  const T& at(std::span<const std::size_t> index) const { return values_[offset(index)]; }

  friend bool operator==(const FieldND&, const FieldND&) = default;

 private:
  std::vector<std::size_t> shape_;
  std::vector<T> values_;
  std::optional<std::size_t> staggered_axis_;
};

enum class Completion { unique, min_norm, pinned };

inline const char* to_string(Completion c) noexcept {
  switch (c) {
    case Completion::unique: return "unique";
    case Completion::min_norm: return "min-norm";
    case Completion::pinned: return "pin";
  }
  return "?";
}

// How even-grid lines are completed. unique accepts odd grids only, pinned
// even grids only, min_norm either (on odd grids it is the unique solution).
struct Strategy {
  Completion kind = Completion::unique;
  std::size_t pin_index = 1;  // 1-based edge number
  double pin_value = 0.0;

  static Strategy unique() { return {Completion::unique, 1, 0.0}; }
  static Strategy min_norm() { return {Completion::min_norm, 1, 0.0}; }
  static Strategy pinned(std::size_t index, double value) { return {Completion::pinned, index, value}; }
};

struct LineSummary {
  std::size_t lines = 0;
  std::size_t unique = 0;
  std::size_t family = 0;
  std::size_t inconsistent = 0;
  double max_residual = 0.0;  // largest |2 * alternating sum| over even-grid lines
};

template <class T>
struct EdgeTransform {
  FieldND<T> field;
  LineSummary summary;
};

namespace detail {

// Lines along `axis` of a row-major array: line l starts at
// (l / stride) * extent * stride + l % stride and steps by stride.
struct LineLayout {
  std::size_t outer;
  std::size_t extent;
  std::size_t stride;

  LineLayout(std::span<const std::size_t> shape, std::size_t axis)
      : outer(std::accumulate(shape.begin(), shape.begin() + axis, std::size_t{1}, std::multiplies<>{})),
        extent(shape[axis]),
        stride(std::accumulate(shape.begin() + axis + 1, shape.end(), std::size_t{1}, std::multiplies<>{})) {}

  std::size_t count() const noexcept { return outer * stride; }
  std::size_t base(std::size_t line) const noexcept { return (line / stride) * extent * stride + line % stride; }

  template <class T>
  void gather(std::span<const T> src, std::size_t line, std::vector<T>& out) const {
    out.resize(extent);
    const std::size_t b = base(line);
    for (std::size_t k = 0; k < extent; ++k) out[k] = src[b + k * stride];
  }

  template <class T>
  void scatter(std::span<const T> line_values, std::size_t line, std::vector<T>& dst) const {
    const std::size_t b = base(line);
    for (std::size_t k = 0; k < extent; ++k) dst[b + k * stride] = line_values[k];
  }
};

// "(2, :, 1)" with ':' marking the transformed axis.
inline std::string line_coordinates(std::span<const std::size_t> shape, std::size_t axis,
                                    std::size_t line) {
  std::vector<std::size_t> idx(shape.size(), 0);
  std::size_t rest = line;
  for (std::size_t a = shape.size(); a-- > 0;) {
    if (a == axis) continue;
    idx[a] = rest % shape[a];
    rest /= shape[a];
  }
  std::ostringstream os;
  os << '(';
  for (std::size_t a = 0; a < shape.size(); ++a) {
    if (a) os << ", ";
    if (a == axis) os << ':';
    else os << idx[a];
  }
  os << ')';
  return os.str();
}

inline void check_axis(std::size_t dims, std::size_t axis) {
  if (axis >= dims) {
    throw std::invalid_argument("axis " + std::to_string(axis) + " out of range for a " +
                                std::to_string(dims) + "-dimensional field");
  }
}

}  // namespace detail

template <class T>
EdgeTransform<T> to_edges_along(const FieldND<T>& field, std::size_t axis, std::size_t n_edges,
                                const Strategy& strategy, double tolerance = default_tolerance) {
  detail::check_axis(field.dims(), axis);
  detail::check_tolerance(tolerance);
  if (field.staggered_axis()) {
    throw std::invalid_argument("field is already staggered along axis " +
                                std::to_string(*field.staggered_axis()));
  }
  const PeriodicStagger1D grid(n_edges);
  if (field.shape()[axis] != grid.n_centers()) {
    throw std::invalid_argument("extent " + std::to_string(field.shape()[axis]) + " along axis " +
                                std::to_string(axis) + " does not match N - 2 = " +
                                std::to_string(grid.n_centers()));
  }
  if (strategy.kind == Completion::unique && !grid.is_odd()) {
    throw parity_error("strategy 'unique' needs an odd number of edge points, got N = " +
                       std::to_string(n_edges));
  }
  if (strategy.kind == Completion::pinned) {
    if (grid.is_odd()) {
      throw parity_error("strategy 'pin' needs an even number of edge points, got N = " +
                         std::to_string(n_edges));
    }
    if (strategy.pin_index < 1 || strategy.pin_index > grid.n_unknowns()) {
      throw std::out_of_range("pin index " + std::to_string(strategy.pin_index) + " outside 1.." +
                              std::to_string(grid.n_unknowns()));
    }
  }

  const detail::LineLayout layout(field.shape(), axis);
  std::vector<T> out(field.size());
  std::vector<T> line;
  LineSummary summary;
  summary.lines = layout.count();
  std::optional<std::size_t> first_bad;
  double first_bad_residual = 0.0;

  for (std::size_t l = 0; l < layout.count(); ++l) {
    layout.gather(field.values(), l, line);
    const CenterField1D<T> centers(grid, line);
    const SolveOutcome<T> outcome = edges_from_centers(centers, tolerance);
    switch (outcome.kind()) {
      case OutcomeKind::unique:
        ++summary.unique;
        layout.scatter(outcome.unique().edges.values(), l, out);
        break;
      case OutcomeKind::family: {
        ++summary.family;
        const double r = std::abs(scalar_traits<T>::to_double(T(2) * alternating_residual(centers)));
        summary.max_residual = std::max(summary.max_residual, r);
        const EdgeField1D<T> edges =
            strategy.kind == Completion::pinned
                ? complete_pinned(centers, strategy.pin_index, T(strategy.pin_value), tolerance)
                : complete_min_norm(outcome);
        layout.scatter(edges.values(), l, out);
        break;
      }
      case OutcomeKind::inconsistent: {
        ++summary.inconsistent;
        const double r = std::abs(scalar_traits<T>::to_double(outcome.inconsistent().residual));
        summary.max_residual = std::max(summary.max_residual, r);
        if (!first_bad) {
          first_bad = l;
          first_bad_residual = scalar_traits<T>::to_double(outcome.inconsistent().residual);
        }
        break;
      }
    }
  }

  if (first_bad) {
    const std::string where = detail::line_coordinates(field.shape(), axis, *first_bad);
    std::ostringstream msg;
    msg << summary.inconsistent << " of " << summary.lines
        << " lines are inconsistent; first at " << where << " with residual " << first_bad_residual;
    throw inconsistent_error(msg.str(), first_bad_residual, where);
  }
  return {FieldND<T>(std::vector<std::size_t>(field.shape().begin(), field.shape().end()),
                     std::move(out), axis),
          summary};
}

template <class T>
FieldND<T> to_centers_along(const FieldND<T>& field, std::size_t axis) {
  detail::check_axis(field.dims(), axis);
  if (field.staggered_axis() != axis) {
    throw std::invalid_argument("field is not staggered along axis " + std::to_string(axis));
  }
  const PeriodicStagger1D grid(field.shape()[axis] + 2);
  const detail::LineLayout layout(field.shape(), axis);
  std::vector<T> out(field.size());
  std::vector<T> line;
  for (std::size_t l = 0; l < layout.count(); ++l) {
    layout.gather(field.values(), l, line);
    const CenterField1D<T> centers = centers_from_edges(EdgeField1D<T>(grid, line));
    layout.scatter(centers.values(), l, out);
  }
  return FieldND<T>(std::vector<std::size_t>(field.shape().begin(), field.shape().end()),
                    std::move(out));
}

}  // namespace stagger
