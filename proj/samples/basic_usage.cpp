// Recovers edge values from centers on an odd and an even periodic grid.

#include <iostream>

#include "stagger/stagger.hpp"

int main() {
  using namespace stagger;

  // N = 5: three unknowns, always uniquely solvable.
  const CenterField1D<double> odd({1.0, 2.0, 3.0});
  const auto unique = edges_from_centers(odd);
  std::cout << "N=5 edges:";
  for (double e : unique.unique().edges.values()) std::cout << ' ' << e;
  std::cout << '\n';

  // N = 6: solvable only when the alternating sum of the centers vanishes,
  // and then only up to a multiple of (+1,-1,+1,-1).
  const CenterField1D<double> even({1.0, 2.0, 3.0, 2.0});
  const auto family = edges_from_centers(even);
  std::cout << "N=6 outcome: " << to_string(family.kind()) << '\n';
  std::cout << "  min-norm member:";
  const auto min_norm = complete_min_norm(family);
  for (double e : min_norm.values()) std::cout << ' ' << e;
  std::cout << "\n  member with e_2 = 2:";
  const auto pinned = complete_pinned(even, 2, 2.0);
  for (double e : pinned.values()) std::cout << ' ' << e;
  std::cout << '\n';

  const CenterField1D<double> bad({1.0, 2.0, 3.0, 5.0});
  const auto none = edges_from_centers(bad);
  std::cout << "N=6 with c_4 = 5: " << to_string(none.kind())
            << ", residual " << none.inconsistent().residual << '\n';

  // 2D field, periodic along axis 0 with N = 5.
  const FieldND<double> field({3, 2}, {1, 1, 2, 2, 3, 3});
  const auto staggered = to_edges_along(field, 0, 5, Strategy::unique());
  write_field(std::cout, staggered.field);
}
