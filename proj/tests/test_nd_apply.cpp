#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "reference.hpp"
#include "stagger/nd_apply.hpp"

namespace {

using stagger::FieldND;
using stagger::Strategy;
namespace ref = stagger::reference;

std::vector<double> vals(const FieldND<double>& f) { return ref::to_vector<double>(f.values()); }

TEST(FieldND, Validation) {
  EXPECT_THROW(FieldND<double>({2, 2}, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(FieldND<double>({}, {}), std::invalid_argument);
  EXPECT_THROW(FieldND<double>({2}, {1, 2}, 1), std::invalid_argument);
  EXPECT_THROW(FieldND<double>({2}, {1, std::nan("")}), std::invalid_argument);
  const FieldND<double> f({2, 3}, {0, 1, 2, 3, 4, 5});
  const std::vector<std::size_t> idx{1, 2};
  EXPECT_EQ(f.at(idx), 5.0);
}

TEST(ToEdgesAlong, ColumnsOf3x3) {
  // axis 0 periodic with N = 5; every column is (1,2,3)
  const FieldND<double> f({3, 3}, {1, 1, 1, 2, 2, 2, 3, 3, 3});
  const auto out = stagger::to_edges_along(f, 0, 5, Strategy::unique());
  EXPECT_EQ(vals(out.field), (std::vector<double>{2, 2, 2, 0, 0, 0, 4, 4, 4}));
  EXPECT_EQ(out.field.staggered_axis(), 0u);
  EXPECT_EQ(out.summary.lines, 3u);
  EXPECT_EQ(out.summary.unique, 3u);
  EXPECT_EQ(out.summary.family, 0u);
  EXPECT_EQ(out.summary.max_residual, 0.0);
}

TEST(ToEdgesAlong, MinNormColumnsOf4x2) {
  const FieldND<double> f({4, 2}, {1, 1, 2, 2, 3, 3, 2, 2});
  const auto out = stagger::to_edges_along(f, 0, 6, Strategy::min_norm());
  EXPECT_EQ(vals(out.field), (std::vector<double>{1, 1, 1, 1, 3, 3, 3, 3}));
  EXPECT_EQ(out.summary.family, 2u);
}

TEST(ToEdgesAlong, PinnedRows) {
  // axis 1 this time: rows are the lines
  const FieldND<double> f({2, 4}, {1, 2, 3, 2, 0, 0, 0, 0});
  const auto out = stagger::to_edges_along(f, 1, 6, Strategy::pinned(1, 1.0));
  EXPECT_EQ(vals(out.field), (std::vector<double>{1, 1, 3, 3, 1, -1, 1, -1}));
}

TEST(ToEdgesAlong, MinNormOnOddGridIsUnique) {
  const FieldND<double> f({3}, {1, 2, 3});
  const auto out = stagger::to_edges_along(f, 0, 5, Strategy::min_norm());
  EXPECT_EQ(vals(out.field), (std::vector<double>{2, 0, 4}));
}

TEST(ToEdgesAlong, ConstantFieldStaysConstant) {
  const FieldND<double> f({5, 3, 2}, std::vector<double>(30, 2.5));
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const std::size_t n = f.shape()[axis] + 2;
    if (n % 2 == 0) continue;
    const auto out = stagger::to_edges_along(f, axis, n, Strategy::unique());
    for (double v : out.field.values()) EXPECT_DOUBLE_EQ(v, 2.5);
  }
}

TEST(ToEdgesAlong, Errors) {
  const FieldND<double> f({4, 2}, {1, 1, 2, 2, 3, 3, 5, 2});
  EXPECT_THROW(stagger::to_edges_along(f, 0, 6, Strategy::unique()), stagger::parity_error);
  EXPECT_THROW(stagger::to_edges_along(f, 0, 5, Strategy::min_norm()), std::invalid_argument);
  EXPECT_THROW(stagger::to_edges_along(f, 2, 6, Strategy::min_norm()), std::invalid_argument);
  EXPECT_THROW(stagger::to_edges_along(f, 0, 6, Strategy::pinned(5, 0.0)), std::out_of_range);
  EXPECT_THROW(stagger::to_edges_along(FieldND<double>({3}, {1, 2, 3}), 0, 5, Strategy::pinned(1, 0.0)),
               stagger::parity_error);
  EXPECT_THROW(stagger::to_edges_along(FieldND<double>({3}, {1, 2, 3}, 0), 0, 5, Strategy::unique()),
               std::invalid_argument);

  // column 0 is (1,2,3,5): inconsistent; column 1 is (1,2,3,2): fine
  try {
    stagger::to_edges_along(f, 0, 6, Strategy::min_norm());
    FAIL() << "expected inconsistent_error";
  } catch (const stagger::inconsistent_error& e) {
    EXPECT_EQ(e.location(), "(:, 0)");
    EXPECT_EQ(e.residual(), 6.0);
  }
}

TEST(ToEdgesAlong, ReportsLineCoordinatesIn3D) {
  std::vector<double> v(2 * 4 * 3, 0.0);
  // line (1, :, 2) gets centers (0,0,0,1)
  v[1 * 12 + 3 * 3 + 2] = 1.0;
  const FieldND<double> f({2, 4, 3}, v);
  try {
    stagger::to_edges_along(f, 1, 6, Strategy::pinned(2, 0.0));
    FAIL() << "expected inconsistent_error";
  } catch (const stagger::inconsistent_error& e) {
    EXPECT_EQ(e.location(), "(1, :, 2)");
    EXPECT_EQ(e.residual(), 2.0);
  }
}

TEST(ToCentersAlong, Examples) {
  const FieldND<double> line({3}, {2, 0, 4}, 0);
  const auto c = stagger::to_centers_along(line, 0);
  EXPECT_EQ(vals(c), (std::vector<double>{1, 2, 3}));
  EXPECT_FALSE(c.staggered_axis().has_value());
  EXPECT_THROW(stagger::to_centers_along(FieldND<double>({3}, {2, 0, 4}), 0), std::invalid_argument);
}

TEST(ToCentersAlong, OnlyTheStaggeredAxisMoves) {
  std::mt19937_64 rng(8);
  const std::vector<std::size_t> shape{3, 5, 4};
  const auto v = ref::random_reals(rng, 60);
  const FieldND<double> f(shape, v, 1);
  const auto out = stagger::to_centers_along(f, 1);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      std::vector<double> line(5);
      for (std::size_t j = 0; j < 5; ++j) line[j] = v[(i * 5 + j) * 4 + k];
      const auto expected = ref::average_periodic(line);
      for (std::size_t j = 0; j < 5; ++j) {
        const std::vector<std::size_t> idx{i, j, k};
        EXPECT_EQ(out.at(idx), expected[j]);
      }
    }
  }
}

TEST(Properties, RoundTripOddAlongEachAxis) {
  std::mt19937_64 rng(21);
  const std::vector<std::size_t> shape{5, 3, 7};
  const auto v = ref::random_reals(rng, 105, -4.0, 4.0);
  const FieldND<double> f(shape, v);
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const auto edges = stagger::to_edges_along(f, axis, shape[axis] + 2, Strategy::unique());
    const auto back = stagger::to_centers_along(edges.field, axis);
    EXPECT_LE(ref::relative_error(vals(back), v), 1e-12);
  }
}

TEST(Properties, LinePermutationCommutes) {
  // Permuting slices orthogonal to axis 0 (here: columns) commutes with both transforms.
  std::mt19937_64 rng(33);
  const std::size_t rows = 5, cols = 6;
  const auto v = ref::random_reals(rng, rows * cols);
  std::vector<std::size_t> perm(cols);
  for (std::size_t j = 0; j < cols; ++j) perm[j] = j;
  std::shuffle(perm.begin(), perm.end(), rng);
  auto permute = [&](const std::vector<double>& in) {
    std::vector<double> out(in.size());
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out[i * cols + j] = in[i * cols + perm[j]];
    return out;
  };
  const FieldND<double> f({rows, cols}, v);
  const FieldND<double> fp({rows, cols}, permute(v));
  const auto a = stagger::to_edges_along(f, 0, rows + 2, Strategy::unique());
  const auto b = stagger::to_edges_along(fp, 0, rows + 2, Strategy::unique());
  EXPECT_EQ(permute(vals(a.field)), vals(b.field));
  EXPECT_EQ(permute(vals(stagger::to_centers_along(a.field, 0))), vals(stagger::to_centers_along(b.field, 0)));
}

}  // namespace
