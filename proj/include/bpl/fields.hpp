// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>

#include <Eigen/Dense>

#include "bpl/trig.hpp"

namespace bpl {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

[[nodiscard]] inline Vec2 unit_normal(double theta) { return {std::cos(theta), std::sin(theta)}; }
[[nodiscard]] inline Vec2 unit_tangent(double theta) { return {-std::sin(theta), std::cos(theta)}; }

/// A scalar function on ∂K parameterized by the outer normal angle θ, so
/// ρ = f∘ν_K. Stored spectrally; derivatives are exact for the series.
class BoundaryField {
 public:
  BoundaryField() = default;
  explicit BoundaryField(TrigSeries series) : series_(std::move(series)) {}

  static BoundaryField constant(double c) { return BoundaryField(TrigSeries::constant(c)); }
  /// Samples `fn` on an M-point grid and interpolates.
  static BoundaryField from_function(const std::function<double(double)>& fn, int M);

  [[nodiscard]] const TrigSeries& series() const noexcept { return series_; }
  [[nodiscard]] double operator()(double theta) const { return series_(theta); }
  [[nodiscard]] double derivative(double theta) const { return series_.derivative(theta, 1); }
  [[nodiscard]] TrigSeries::Samples sample(int M) const { return series_.sample(M); }

  BoundaryField& operator+=(const BoundaryField& o) { series_ += o.series_; return *this; }
  friend BoundaryField operator+(BoundaryField a, const BoundaryField& b) { return a += b; }
  friend BoundaryField operator*(double s, BoundaryField a) {
    a.series_ *= s;
    return a;
  }

 private:
  TrigSeries series_;
};

/// A scalar function on K (or ℝ²), optionally with an analytic gradient.
class InteriorField {
 public:
  using ValueFn = std::function<double(const Vec2&)>;
  using GradientFn = std::function<Vec2(const Vec2&)>;

  InteriorField() : InteriorField(constant(0.0)) {}
  explicit InteriorField(ValueFn value, std::optional<GradientFn> gradient = std::nullopt)
      : value_(std::move(value)), gradient_(std::move(gradient)) {}

  static InteriorField constant(double c);
  static InteriorField linear(const Vec2& b, double c = 0.0);
  /// ½⟨Cx,x⟩ + ⟨b,x⟩ + c with C symmetric.
  static InteriorField quadratic(const Mat2& C, const Vec2& b, double c);

  [[nodiscard]] double operator()(const Vec2& x) const { return value_(x); }
  [[nodiscard]] bool has_gradient() const noexcept { return gradient_.has_value(); }
  /// Analytic gradient when available, otherwise a central difference.
  [[nodiscard]] Vec2 gradient(const Vec2& x, double fd_step) const;

  /// a·this + b·other; the gradient stays analytic when both are.
  [[nodiscard]] static InteriorField combine(double a, const InteriorField& f, double b,
                                             const InteriorField& g);

 private:
  ValueFn value_;
  std::optional<GradientFn> gradient_;
};

}  // namespace bpl
