// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "bpl/fields.hpp"
#include "bpl/trig.hpp"

namespace bpl {

inline constexpr int kDefaultGridSize = 256;

struct BoundaryPoint {
  double theta = 0.0;
  Vec2 x = Vec2::Zero();
  Vec2 normal = Vec2::UnitX();
  Vec2 tangent = Vec2::UnitY();
  double radius = 0.0;  ///< radius of curvature h + h''
};

/// Planar smooth strictly convex body K represented by its support function
/// h(θ) = h_K(cos θ, sin θ). Immutable; grid quantities are cached on the
/// uniform M-point grid at construction.
class SupportFunction {
 public:
  /// Validates strict convexity: r = h + h'' ≥ 1e-8·max r on the grid.
  SupportFunction(TrigSeries h, int M = kDefaultGridSize);

  [[nodiscard]] const TrigSeries& series() const noexcept { return h_; }
  [[nodiscard]] int grid_size() const noexcept { return M_; }
  [[nodiscard]] double theta(int j) const noexcept { return grid_angle(j, M_); }

  [[nodiscard]] const std::vector<double>& values() const noexcept { return s_.value; }
  [[nodiscard]] const std::vector<double>& d1() const noexcept { return s_.d1; }
  [[nodiscard]] const std::vector<double>& d2() const noexcept { return s_.d2; }
  [[nodiscard]] const std::vector<double>& radius() const noexcept { return radius_; }

  /// min / max curvature 1/r over the grid.
  [[nodiscard]] double min_curvature() const noexcept { return m1_; }
  [[nodiscard]] double max_curvature() const noexcept { return m2_; }
  [[nodiscard]] double min_support() const noexcept { return min_h_; }
  [[nodiscard]] bool is_even() const noexcept { return even_; }
  [[nodiscard]] bool contains_origin() const noexcept { return min_h_ > 0.0; }

  /// Cumulative translation removed by center(); zero for raw bodies.
  [[nodiscard]] const Vec2& centering_shift() const noexcept { return shift_; }

  [[nodiscard]] BoundaryPoint node(int j) const;
  [[nodiscard]] BoundaryPoint point_at(double theta) const;

  [[nodiscard]] double perimeter() const;
  [[nodiscard]] double diameter_bound() const;
  /// s = (1/π)∫ h ν dθ.
  [[nodiscard]] Vec2 steiner_point() const;

  /// K + v, i.e. h + ⟨v, ν⟩.
  [[nodiscard]] SupportFunction translated(const Vec2& v) const;
  [[nodiscard]] SupportFunction with_grid(int M) const;

 private:
  TrigSeries h_;
  int M_;
  TrigSeries::Samples s_;
  std::vector<double> radius_;
  double m1_ = 0.0;
  double m2_ = 0.0;
  double min_h_ = 0.0;
  bool even_ = false;
  Vec2 shift_ = Vec2::Zero();

  friend SupportFunction center(const SupportFunction& h);
};

struct BodyDescriptor {
  std::string kind = "disk";  ///< disk | ellipse | fourier | hull
  double radius = 1.0;
  double a = 1.0;
  double b = 1.0;
  std::vector<double> cos_coeffs;  ///< fourier: c_0, c_1, ...
  std::vector<double> sin_coeffs;  ///< fourier: s_1, s_2, ...
  std::vector<Vec2> points;        ///< hull vertices
  double smoothing = 0.05;         ///< hull: heat-kernel time
  Vec2 translate = Vec2::Zero();   ///< applied before centering
};

SupportFunction make_disk(double R, int M = kDefaultGridSize);
SupportFunction make_ellipse(double a, double b, int M = kDefaultGridSize);
/// sin_coeffs[i] multiplies sin((i+1)θ).
SupportFunction make_fourier(const std::vector<double>& cos_coeffs,
                             const std::vector<double>& sin_coeffs, int M = kDefaultGridSize);
/// Convex hull of points, smoothed by the heat kernel on the circle. The
/// kernel is positive, so h + h'' stays a positive density.
SupportFunction make_smoothed_hull(const std::vector<Vec2>& points, double smoothing,
                                   int M = kDefaultGridSize);
/// Builds, translates, and centers at the Steiner point.
SupportFunction make_body(const BodyDescriptor& desc, int M = kDefaultGridSize);

/// [h + t f]; throws PerturbationTooLarge if convexity is lost.
SupportFunction wulff_perturb(const SupportFunction& h, const BoundaryField& f, double t);
/// (1-t)K + tL.
SupportFunction minkowski_combine(const SupportFunction& hK, const SupportFunction& hL, double t);
/// Translates K so that its Steiner point is the origin.
SupportFunction center(const SupportFunction& h);

struct GaugeResult {
  double value = 0.0;
  double theta = 0.0;  ///< maximizing normal angle (the normal at x/‖x‖_K)
};

/// ‖x‖_K = sup_θ ⟨x, ν(θ)⟩ / h(θ), refined by Newton from the grid argmax.
GaugeResult gauge(const SupportFunction& h, const Vec2& x);

}  // namespace bpl
