// SPDX-License-Identifier: Apache-2.0
#include "bpl/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bpl/errors.hpp"

namespace bpl {
namespace {

constexpr double kConvexityTolerance = 1e-8;
constexpr double kEvenTolerance = 1e-12;

}  // namespace

SupportFunction::SupportFunction(TrigSeries h, int M) : h_(std::move(h)), M_(M) {
  if (M_ < 8 || M_ % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "grid size must be even and >= 8");
  }
  s_ = h_.sample(M_);
  radius_.resize(M_);
  double rmax = 0.0;
  for (int j = 0; j < M_; ++j) {
    radius_[j] = s_.value[j] + s_.d2[j];
    if (!std::isfinite(radius_[j])) {
      throw Error(ErrorKind::InvalidArgument, "support function is not finite");
    }
    rmax = std::max(rmax, radius_[j]);
  }
  const auto jmin = static_cast<int>(std::min_element(radius_.begin(), radius_.end()) - radius_.begin());
  if (rmax <= 0.0 || radius_[jmin] < kConvexityTolerance * rmax) {
    std::ostringstream msg;
    msg.precision(15);
    msg << "h + h'' = " << radius_[jmin] << " at theta = " << theta(jmin)
        << " (max " << rmax << ")";
    throw Error(ErrorKind::NotStrictlyConvex, msg.str());
  }
  m1_ = 1.0 / rmax;
  m2_ = 1.0 / radius_[jmin];
  min_h_ = *std::min_element(s_.value.begin(), s_.value.end());
  const double hscale = std::max(1.0, std::abs(*std::max_element(s_.value.begin(), s_.value.end())));
  even_ = true;
  for (int j = 0; j < M_ / 2 && even_; ++j) {
    even_ = std::abs(s_.value[j] - s_.value[j + M_ / 2]) <= kEvenTolerance * hscale;
  }
}

BoundaryPoint SupportFunction::node(int j) const {
  const double th = theta(j);
  BoundaryPoint p;
  p.theta = th;
  p.normal = unit_normal(th);
  p.tangent = unit_tangent(th);
  p.x = s_.value[j] * p.normal + s_.d1[j] * p.tangent;
  p.radius = radius_[j];
  return p;
}

BoundaryPoint SupportFunction::point_at(double th) const {
  BoundaryPoint p;
  p.theta = th;
  p.normal = unit_normal(th);
  p.tangent = unit_tangent(th);
  const double hv = h_.derivative(th, 0);
  p.x = hv * p.normal + h_.derivative(th, 1) * p.tangent;
  p.radius = hv + h_.derivative(th, 2);
  return p;
}

double SupportFunction::perimeter() const { return kTwoPi * h_.cos_coeff(0); }

double SupportFunction::diameter_bound() const {
  double m = 0.0;
  for (int j = 0; j < M_; ++j) m = std::max(m, node(j).x.norm());
  return 2.0 * m;
}

Vec2 SupportFunction::steiner_point() const { return {h_.cos_coeff(1), h_.sin_coeff(1)}; }

SupportFunction SupportFunction::translated(const Vec2& v) const {
  TrigSeries shifted = h_;
  shifted += TrigSeries({0.0, v.x()}, {0.0, v.y()});
  SupportFunction out(std::move(shifted), M_);
  out.shift_ = shift_;
  return out;
}

SupportFunction SupportFunction::with_grid(int M) const {
  if (M == M_) return *this;
  SupportFunction out(h_, M);
  out.shift_ = shift_;
  return out;
}

SupportFunction make_disk(double R, int M) {
  if (!(R > 0.0)) throw Error(ErrorKind::InvalidArgument, "disk radius must be positive");
  return SupportFunction(TrigSeries::constant(R), M);
}

SupportFunction make_ellipse(double a, double b, int M) {
  if (!(a > 0.0 && b > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "ellipse semi-axes must be positive");
  }
  std::vector<double> v(M);
  for (int j = 0; j < M; ++j) {
    const double c = std::cos(grid_angle(j, M));
    const double s = std::sin(grid_angle(j, M));
    v[j] = std::sqrt(a * a * c * c + b * b * s * s);
  }
  return SupportFunction(TrigSeries::from_samples(v), M);
}

SupportFunction make_fourier(const std::vector<double>& cos_coeffs,
                             const std::vector<double>& sin_coeffs, int M) {
  if (cos_coeffs.empty()) {
    throw Error(ErrorKind::InvalidArgument, "fourier body needs at least c_0");
  }
  std::vector<double> s(sin_coeffs.size() + 1, 0.0);
  std::copy(sin_coeffs.begin(), sin_coeffs.end(), s.begin() + 1);
  return SupportFunction(TrigSeries(cos_coeffs, std::move(s)), M);
}

SupportFunction make_smoothed_hull(const std::vector<Vec2>& points, double smoothing, int M) {
  if (points.size() < 3) throw Error(ErrorKind::InvalidArgument, "hull needs >= 3 points");
  if (!(smoothing > 0.0)) throw Error(ErrorKind::InvalidArgument, "hull smoothing must be > 0");
  // Oversample the piecewise-sinusoidal polygon support function to keep
  // aliasing well below the smoothed modes.
  const int fine = 16 * M;
  std::vector<double> v(fine);
  for (int j = 0; j < fine; ++j) {
    const Vec2 nu = unit_normal(grid_angle(j, fine));
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& p : points) m = std::max(m, p.dot(nu));
    v[j] = m;
  }
  const TrigSeries raw = TrigSeries::from_samples(v).truncated(M / 2 - 1);
  std::vector<double> c = raw.cos_coeffs();
  std::vector<double> s = raw.sin_coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double damp = std::exp(-smoothing * static_cast<double>(k * k));
    c[k] *= damp;
    s[k] *= damp;
  }
  return SupportFunction(TrigSeries(std::move(c), std::move(s)), M);
}

SupportFunction make_body(const BodyDescriptor& desc, int M) {
  SupportFunction raw = [&] {
    if (desc.kind == "disk") return make_disk(desc.radius, M);
    if (desc.kind == "ellipse") return make_ellipse(desc.a, desc.b, M);
    if (desc.kind == "fourier") return make_fourier(desc.cos_coeffs, desc.sin_coeffs, M);
    if (desc.kind == "hull") return make_smoothed_hull(desc.points, desc.smoothing, M);
    throw Error(ErrorKind::InvalidArgument, "unknown body kind '" + desc.kind + "'");
  }();
  if (desc.translate.squaredNorm() > 0.0) raw = raw.translated(desc.translate);
  return center(raw);
}

SupportFunction wulff_perturb(const SupportFunction& h, const BoundaryField& f, double t) {
  TrigSeries ht = h.series();
  ht += f.series() * t;
  try {
    SupportFunction out(std::move(ht), h.grid_size());
    return out;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotStrictlyConvex) throw;
    std::ostringstream msg;
    msg << "t = " << t << " leaves the admissible range (" << e.what() << ")";
    throw Error(ErrorKind::PerturbationTooLarge, msg.str());
  }
}

SupportFunction minkowski_combine(const SupportFunction& hK, const SupportFunction& hL, double t) {
  if (t < 0.0 || t > 1.0) throw Error(ErrorKind::InvalidArgument, "t must lie in [0,1]");
  return SupportFunction(hK.series() * (1.0 - t) + hL.series() * t, hK.grid_size());
}

SupportFunction center(const SupportFunction& h) {
  const Vec2 s = h.steiner_point();
  SupportFunction out = h.translated(-s);
  out.shift_ = h.shift_ + s;
  // Exact zeros: the translation only touches first harmonics.
  if (!out.contains_origin()) {
    throw Error(ErrorKind::OriginOutside, "h <= 0 after Steiner-point centering");
  }
  return out;
}

GaugeResult gauge(const SupportFunction& h, const Vec2& x) {
  if (!h.contains_origin()) {
    throw Error(ErrorKind::OriginOutside, "gauge needs the origin in the interior of K");
  }
  if (x.squaredNorm() == 0.0) return {0.0, 0.0};
  const int M = h.grid_size();
  int jbest = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < M; ++j) {
    const double g = x.dot(unit_normal(h.theta(j))) / h.values()[j];
    if (g > best) {
      best = g;
      jbest = j;
    }
  }
  const auto& series = h.series();
  double th = h.theta(jbest);
  for (int it = 0; it < 20; ++it) {
    const double hv = series.derivative(th, 0);
    const double h1 = series.derivative(th, 1);
    const double h2 = series.derivative(th, 2);
    const double p = x.dot(unit_normal(th));
    const double p1 = x.dot(unit_tangent(th));
    const double num = p1 * hv - p * h1;
    const double g1 = num / (hv * hv);
    const double g2 = (-p * (hv + h2) * hv - 2.0 * num * h1) / (hv * hv * hv);
    if (g2 >= 0.0) break;  // left the concave basin; keep the grid value
    const double step = g1 / g2;
    th -= step;
    if (std::abs(step) < 1e-12) break;
  }
  const double refined = x.dot(unit_normal(th)) / series(th);
  if (refined < best) return {best, h.theta(jbest)};
  th = std::fmod(th, kTwoPi);
  if (th < 0.0) th += kTwoPi;
  return {refined, th};
}

}  // namespace bpl
