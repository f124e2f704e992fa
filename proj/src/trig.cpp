// SPDX-License-Identifier: Apache-2.0
#include "bpl/trig.hpp"

#include <algorithm>
#include <cmath>

#include "bpl/errors.hpp"

namespace bpl {
namespace {

struct TrigTable {
  std::vector<double> c;
  std::vector<double> s;
  explicit TrigTable(int M) : c(M), s(M) {
    for (int m = 0; m < M; ++m) {
      c[m] = std::cos(grid_angle(m, M));
      s[m] = std::sin(grid_angle(m, M));
    }
  }
};

}  // namespace

TrigSeries::TrigSeries(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
  if (cos_.empty()) cos_.push_back(0.0);
  if (sin_.empty()) sin_.push_back(0.0);
  const auto n = std::max(cos_.size(), sin_.size());
  cos_.resize(n, 0.0);
  sin_.resize(n, 0.0);
  sin_[0] = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(cos_[k]) || !std::isfinite(sin_[k])) {
      throw Error(ErrorKind::InvalidArgument, "non-finite Fourier coefficient");
    }
  }
}

TrigSeries TrigSeries::constant(double c) { return TrigSeries({c}, {0.0}); }

TrigSeries TrigSeries::cosine(int k, double amplitude) {
  std::vector<double> c(k + 1, 0.0);
  c[k] = amplitude;
  return TrigSeries(std::move(c), std::vector<double>(k + 1, 0.0));
}

TrigSeries TrigSeries::sine(int k, double amplitude) {
  std::vector<double> s(k + 1, 0.0);
  if (k > 0) s[k] = amplitude;
  return TrigSeries(std::vector<double>(k + 1, 0.0), std::move(s));
}

TrigSeries TrigSeries::from_samples(std::span<const double> samples) {
  const int M = static_cast<int>(samples.size());
  if (M < 4 || M % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "sample count must be even and >= 4");
  }
  const TrigTable table(M);
  const int half = M / 2;
  std::vector<double> c(half + 1, 0.0);
  std::vector<double> s(half + 1, 0.0);
  for (int k = 0; k <= half; ++k) {
    double ac = 0.0;
    double as = 0.0;
    for (int j = 0; j < M; ++j) {
      const int idx = static_cast<int>((static_cast<long>(k) * j) % M);
      ac += samples[j] * table.c[idx];
      as += samples[j] * table.s[idx];
    }
    const double scale = (k == 0 || k == half) ? 1.0 / M : 2.0 / M;
    c[k] = ac * scale;
    s[k] = (k == 0 || k == half) ? 0.0 : as * scale;
  }
  return TrigSeries(std::move(c), std::move(s));
}

double TrigSeries::cos_coeff(int k) const noexcept {
  return (k >= 0 && k <= order()) ? cos_[k] : 0.0;
}

double TrigSeries::sin_coeff(int k) const noexcept {
  return (k >= 1 && k <= order()) ? sin_[k] : 0.0;
}

double TrigSeries::derivative(double theta, int d) const {
  double acc = d == 0 ? cos_[0] : 0.0;
  for (int k = 1; k <= order(); ++k) {
    const double kt = k * theta;
    const double ck = std::cos(kt);
    const double sk = std::sin(kt);
    const double kd = std::pow(static_cast<double>(k), d);
    // d-th derivative cycles through (cos, -sin, -cos, sin).
    switch (d % 4) {
      case 0: acc += kd * (cos_[k] * ck + sin_[k] * sk); break;
      case 1: acc += kd * (-cos_[k] * sk + sin_[k] * ck); break;
      case 2: acc += kd * (-cos_[k] * ck - sin_[k] * sk); break;
      default: acc += kd * (cos_[k] * sk - sin_[k] * ck); break;
    }
  }
  return acc;
}

TrigSeries::Samples TrigSeries::sample(int M) const {
  const TrigTable table(M);
  Samples out{std::vector<double>(M, cos_[0]), std::vector<double>(M, 0.0),
              std::vector<double>(M, 0.0)};
  for (int k = 1; k <= order(); ++k) {
    const double a = cos_[k];
    const double b = sin_[k];
    if (a == 0.0 && b == 0.0) continue;
    const double kk = static_cast<double>(k);
    for (int j = 0; j < M; ++j) {
      const int idx = static_cast<int>((static_cast<long>(k) * j) % M);
      const double ck = table.c[idx];
      const double sk = table.s[idx];
      out.value[j] += a * ck + b * sk;
      out.d1[j] += kk * (-a * sk + b * ck);
      out.d2[j] -= kk * kk * (a * ck + b * sk);
    }
  }
  return out;
}

TrigSeries TrigSeries::truncated(int max_order) const {
  const int n = std::min(order(), max_order);
  return TrigSeries(std::vector<double>(cos_.begin(), cos_.begin() + n + 1),
                    std::vector<double>(sin_.begin(), sin_.begin() + n + 1));
}

double TrigSeries::max_abs_odd_coeff() const noexcept {
  double m = 0.0;
  for (int k = 1; k <= order(); k += 2) {
    m = std::max({m, std::abs(cos_[k]), std::abs(sin_[k])});
  }
  return m;
}

void TrigSeries::pad_to(int n) {
  if (order() < n) {
    cos_.resize(n + 1, 0.0);
    sin_.resize(n + 1, 0.0);
  }
}

TrigSeries& TrigSeries::operator+=(const TrigSeries& other) {
  pad_to(other.order());
  for (int k = 0; k <= other.order(); ++k) {
    cos_[k] += other.cos_[k];
    sin_[k] += other.sin_[k];
  }
  return *this;
}

TrigSeries& TrigSeries::operator-=(const TrigSeries& other) {
  pad_to(other.order());
  for (int k = 0; k <= other.order(); ++k) {
    cos_[k] -= other.cos_[k];
    sin_[k] -= other.sin_[k];
  }
  return *this;
}

TrigSeries& TrigSeries::operator*=(double s) {
  for (auto& c : cos_) c *= s;
  for (auto& c : sin_) c *= s;
  return *this;
}

}  // namespace bpl
