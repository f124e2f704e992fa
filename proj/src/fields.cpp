// SPDX-License-Identifier: Apache-2.0
#include "bpl/fields.hpp"

#include <vector>

namespace bpl {

BoundaryField BoundaryField::from_function(const std::function<double(double)>& fn, int M) {
  std::vector<double> v(M);
  for (int j = 0; j < M; ++j) v[j] = fn(grid_angle(j, M));
  return BoundaryField(TrigSeries::from_samples(v));
}

InteriorField InteriorField::constant(double c) {
  return InteriorField([c](const Vec2&) { return c; }, [](const Vec2&) { return Vec2::Zero().eval(); });
}

InteriorField InteriorField::linear(const Vec2& b, double c) {
  return InteriorField([b, c](const Vec2& x) { return b.dot(x) + c; },
                       [b](const Vec2&) { return b; });
}

InteriorField InteriorField::quadratic(const Mat2& C, const Vec2& b, double c) {
  const Mat2 S = 0.5 * (C + C.transpose());
  return InteriorField([S, b, c](const Vec2& x) { return 0.5 * x.dot(S * x) + b.dot(x) + c; },
                       [S, b](const Vec2& x) { return (S * x + b).eval(); });
}

Vec2 InteriorField::gradient(const Vec2& x, double fd_step) const {
  if (gradient_) return (*gradient_)(x);
  const Vec2 e1(fd_step, 0.0);
  const Vec2 e2(0.0, fd_step);
  return {(value_(x + e1) - value_(x - e1)) / (2.0 * fd_step),
          (value_(x + e2) - value_(x - e2)) / (2.0 * fd_step)};
}

InteriorField InteriorField::combine(double a, const InteriorField& f, double b,
                                     const InteriorField& g) {
  ValueFn value = [a, b, fv = f.value_, gv = g.value_](const Vec2& x) {
    return a * fv(x) + b * gv(x);
  };
  if (f.gradient_ && g.gradient_) {
    GradientFn grad = [a, b, fg = *f.gradient_, gg = *g.gradient_](const Vec2& x) {
      return (a * fg(x) + b * gg(x)).eval();
    };
    return InteriorField(std::move(value), std::move(grad));
  }
  return InteriorField(std::move(value));
}

}  // namespace bpl
