// SPDX-License-Identifier: Apache-2.0
#include "bpl/random_fields.hpp"

#include <cmath>
#include <vector>

namespace bpl {

BoundaryField random_boundary_field(std::mt19937_64& rng, int order) {
  std::normal_distribution<double> n01(0.0, 1.0);
  std::vector<double> c(order + 1), s(order + 1, 0.0);
  for (int k = 0; k <= order; ++k) {
    c[k] = n01(rng) / (1.0 + k);
    if (k > 0) s[k] = n01(rng) / (1.0 + k);
  }
  return BoundaryField(TrigSeries(std::move(c), std::move(s)));
}

InteriorField random_interior_field(std::mt19937_64& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  Mat2 C;
  C << n01(rng), n01(rng), 0.0, n01(rng);
  C(1, 0) = C(0, 1);
  const Vec2 b(n01(rng), n01(rng));
  const double c = n01(rng);
  const double amp = 0.5 * n01(rng);
  const Vec2 w(1.5 * n01(rng), 1.5 * n01(rng));
  const double phase = n01(rng);
  return InteriorField(
      [=](const Vec2& x) { return 0.5 * x.dot(C * x) + b.dot(x) + c + amp * std::sin(w.dot(x) + phase); },
      [=](const Vec2& x) { return (C * x + b + amp * std::cos(w.dot(x) + phase) * w).eval(); });
}

}  // namespace bpl
