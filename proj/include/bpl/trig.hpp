// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

namespace bpl {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Real trigonometric polynomial
///   f(θ) = c_0 + Σ_{k≥1} (c_k cos kθ + s_k sin kθ).
/// Used for support functions and for every periodic field on the boundary.
class TrigSeries {
 public:
  struct Samples {
    std::vector<double> value;
    std::vector<double> d1;
    std::vector<double> d2;
  };

  TrigSeries() : cos_{0.0}, sin_{0.0} {}
  /// sin_coeffs[0] is ignored; both vectors are padded to a common length.
  TrigSeries(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

  static TrigSeries constant(double c);
  static TrigSeries cosine(int k, double amplitude = 1.0);
  static TrigSeries sine(int k, double amplitude = 1.0);
  /// Trigonometric interpolant of samples on θ_j = 2πj/M (M even). The
  /// Nyquist mode is kept as a pure cosine, so the interpolant reproduces
  /// the samples exactly.
  static TrigSeries from_samples(std::span<const double> samples);

  [[nodiscard]] int order() const noexcept { return static_cast<int>(cos_.size()) - 1; }
  [[nodiscard]] double cos_coeff(int k) const noexcept;
  [[nodiscard]] double sin_coeff(int k) const noexcept;
  [[nodiscard]] const std::vector<double>& cos_coeffs() const noexcept { return cos_; }
  [[nodiscard]] const std::vector<double>& sin_coeffs() const noexcept { return sin_; }

  [[nodiscard]] double operator()(double theta) const { return derivative(theta, 0); }
  [[nodiscard]] double derivative(double theta, int order) const;
  /// Value, first and second derivative on the uniform M-point grid.
  [[nodiscard]] Samples sample(int M) const;

  /// Drops modes above `max_order`.
  [[nodiscard]] TrigSeries truncated(int max_order) const;
  /// Largest |coefficient| over odd frequencies (zero for π-periodic series).
  [[nodiscard]] double max_abs_odd_coeff() const noexcept;

  TrigSeries& operator+=(const TrigSeries& other);
  TrigSeries& operator-=(const TrigSeries& other);
  TrigSeries& operator*=(double s);
  friend TrigSeries operator+(TrigSeries a, const TrigSeries& b) { return a += b; }
  friend TrigSeries operator-(TrigSeries a, const TrigSeries& b) { return a -= b; }
  friend TrigSeries operator*(TrigSeries a, double s) { return a *= s; }
  friend TrigSeries operator*(double s, TrigSeries a) { return a *= s; }

 private:
  void pad_to(int order);

  std::vector<double> cos_;
  std::vector<double> sin_;
};

/// Uniform θ-grid node.
[[nodiscard]] inline double grid_angle(int j, int M) noexcept {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(M);
}

}  // namespace bpl
