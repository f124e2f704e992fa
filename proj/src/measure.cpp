// SPDX-License-Identifier: Apache-2.0
#include "bpl/measure.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "bpl/errors.hpp"

namespace bpl {
namespace {

constexpr int kNewtonMaxIter = 100;
constexpr double kNewtonTol = 1e-12;
constexpr double kArmijo = 1e-4;

// Cholesky-style definiteness test for a symmetric 2x2 matrix.
bool is_positive_definite(const Mat2& H) {
  return H(0, 0) > 0.0 && H.determinant() > 0.0;
}

// Damped Newton minimization of a strictly convex F on ℝ²; `fn` returns
// (F, ∇F, ∇²F). Steps are accepted on Armijo decrease or when the gradient
// norm halves, which absorbs roundoff near the optimum.
template <class Fn>
Vec2 damped_newton(Fn&& fn, Vec2 z, double tol, ErrorKind indefinite, const char* what,
                   int* iterations) {
  auto [F, g, H] = fn(z);
  for (int it = 0; it < kNewtonMaxIter; ++it) {
    if (g.norm() <= tol) {
      if (iterations) *iterations = it;
      return z;
    }
    if (!is_positive_definite(H)) {
      std::ostringstream msg;
      msg << what << ": Hessian lost definiteness at (" << z.x() << ", " << z.y() << ")";
      throw Error(indefinite, msg.str());
    }
    const Vec2 d = -H.ldlt().solve(g);
    const double slope = g.dot(d);
    double step = 1.0;
    bool accepted = false;
    while (step > 1e-12) {
      const Vec2 trial = z + step * d;
      auto [Ft, gt, Ht] = fn(trial);
      if (std::isfinite(Ft) && (Ft <= F + kArmijo * step * slope || gt.norm() <= 0.5 * g.norm())) {
        z = trial;
        F = Ft;
        g = gt;
        H = Ht;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (g.norm() <= 1e3 * tol) break;  // stalled at roundoff level
      throw Error(ErrorKind::NewtonDivergence, std::string(what) + ": line search failed");
    }
  }
  if (g.norm() <= 1e3 * tol) {
    if (iterations) *iterations = kNewtonMaxIter;
    return z;
  }
  std::ostringstream msg;
  msg << what << ": no convergence in " << kNewtonMaxIter << " iterations (|grad| = " << g.norm()
      << ")";
  throw Error(ErrorKind::NewtonDivergence, msg.str());
}

struct Objective {
  double value;
  Vec2 gradient;
  Mat2 hessian;
};

}  // namespace

Potential Potential::gaussian() {
  Potential u(PotentialKind::Gaussian, Mat2::Identity(), 0.0);
  u.pinching_ = Pinching{1.0, 1.0};
  return u;
}

Potential Potential::quadratic(const Mat2& A) {
  if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-14 * std::max(1.0, A.cwiseAbs().maxCoeff())) {
    throw Error(ErrorKind::NotConvexPotential, "quadratic matrix must be symmetric");
  }
  const Mat2 S = 0.5 * (A + A.transpose());
  Eigen::SelfAdjointEigenSolver<Mat2> es(S);
  const Eigen::Vector2d ev = es.eigenvalues();
  if (!(ev(0) > 0.0)) {
    std::ostringstream msg;
    msg << "quadratic matrix is not positive definite (eigenvalues " << ev(0) << ", " << ev(1)
        << ")";
    throw Error(ErrorKind::NotConvexPotential, msg.str());
  }
  Potential u(PotentialKind::Quadratic, S, 0.0);
  u.pinching_ = Pinching{ev(0), ev(1)};
  return u;
}

Potential Potential::even_quartic(double epsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorKind::NotConvexPotential, "even-quartic needs epsilon >= 0");
  }
  return Potential(PotentialKind::EvenQuartic, Mat2::Identity(), epsilon);
}

Potential Potential::zero() { return Potential(PotentialKind::Zero, Mat2::Zero(), 0.0); }

Potential Potential::shifted(const Vec2& by) const {
  Potential u = *this;
  u.shift_ += by;
  return u;
}

Potential Potential::plus_constant(double c) const {
  Potential u = *this;
  u.offset_ += c;
  return u;
}

Potential Potential::with_pinching(const Pinching& p) const {
  if (!(p.k1 > 0.0 && p.k2 >= p.k1)) {
    throw Error(ErrorKind::InvalidArgument, "pinching needs 0 < k1 <= k2");
  }
  Potential u = *this;
  u.pinching_ = p;
  return u;
}

Potential::Eval Potential::eval(const Vec2& x) const {
  const Vec2 y = x - shift_;
  Eval e;
  switch (kind_) {
    case PotentialKind::Gaussian:
      e.value = 0.5 * y.squaredNorm();
      e.gradient = y;
      e.hessian = Mat2::Identity();
      break;
    case PotentialKind::Quadratic:
      e.gradient = A_ * y;
      e.value = 0.5 * y.dot(e.gradient);
      e.hessian = A_;
      break;
    case PotentialKind::EvenQuartic: {
      const double q = y.squaredNorm();
      const double g = 1.0 + 4.0 * eps_ * q;
      e.value = 0.5 * q + eps_ * q * q;
      e.gradient = g * y;
      e.hessian = g * Mat2::Identity() + 8.0 * eps_ * y * y.transpose();
      break;
    }
    case PotentialKind::Zero:
      break;
  }
  e.value += offset_;
  return e;
}

double Potential::value(const Vec2& x) const { return eval(x).value; }
Vec2 Potential::gradient(const Vec2& x) const { return eval(x).gradient; }

std::string Potential::name() const {
  std::ostringstream s;
  switch (kind_) {
    case PotentialKind::Gaussian: s << "gaussian"; break;
    case PotentialKind::Quadratic:
      s << "quadratic(" << A_(0, 0) << "," << A_(0, 1) << "," << A_(1, 1) << ")";
      break;
    case PotentialKind::EvenQuartic: s << "even-quartic(" << eps_ << ")"; break;
    case PotentialKind::Zero: s << "zero"; break;
  }
  if (shift_.squaredNorm() > 0.0) s << "@(" << shift_.x() << "," << shift_.y() << ")";
  if (offset_ != 0.0) s << "+" << offset_;
  return s.str();
}

bool operator==(const Potential& a, const Potential& b) {
  return a.kind_ == b.kind_ && a.A_ == b.A_ && a.eps_ == b.eps_ && a.shift_ == b.shift_ &&
         a.offset_ == b.offset_;
}

Potential make_potential(const PotentialDescriptor& d) {
  Potential u = [&] {
    if (d.kind == "gaussian") return Potential::gaussian();
    if (d.kind == "quadratic") return Potential::quadratic(d.A);
    if (d.kind == "even-quartic") return Potential::even_quartic(d.epsilon);
    if (d.kind == "zero") return Potential::zero();
    throw Error(ErrorKind::InvalidArgument, "unknown potential kind '" + d.kind + "'");
  }();
  if (d.shift.squaredNorm() > 0.0) u = u.shifted(d.shift);
  if (d.offset != 0.0) u = u.plus_constant(d.offset);
  if (d.pinching) u = u.with_pinching(*d.pinching);
  return u;
}

ConjugateResult conjugate(const Potential& u, const Vec2& y) {
  if (u.is_lebesgue()) {
    throw Error(ErrorKind::LebesgueModeRestriction, "the zero potential has no finite conjugate");
  }
  auto fn = [&](const Vec2& z) {
    const auto e = u.eval(z);
    return Objective{e.value - y.dot(z), e.gradient - y, e.hessian};
  };
  ConjugateResult r;
  r.gradient = damped_newton(fn, y, kNewtonTol * std::max(1.0, y.norm()),
                             ErrorKind::NotConvexPotential, "conjugate", &r.iterations);
  r.value = y.dot(r.gradient) - u.value(r.gradient);
  return r;
}

Psi Psi::zero() { return quadratic(Mat2::Zero()); }

Psi Psi::affine(const Vec2& b, double c) { return quadratic(Mat2::Zero(), b, c); }

Psi Psi::quadratic(const Mat2& B, const Vec2& b, double c) {
  Psi p;
  p.kind_ = Kind::Quadratic;
  p.B_ = 0.5 * (B + B.transpose());
  p.b_ = b;
  p.c_ = c;
  return p;
}

Psi Psi::scaled_conjugate(const Potential& u, double alpha) {
  if (u.is_lebesgue()) {
    throw Error(ErrorKind::LebesgueModeRestriction, "α·u* needs a strictly convex u");
  }
  Psi p;
  p.kind_ = Kind::ScaledConjugate;
  p.alpha_ = alpha;
  p.base_ = u;
  return p;
}

bool Psi::is_zero() const noexcept {
  if (kind_ == Kind::ScaledConjugate) return alpha_ == 0.0;
  return B_.isZero(0.0) && b_.isZero(0.0) && c_ == 0.0;
}

double Psi::value(const Vec2& y) const {
  if (kind_ == Kind::ScaledConjugate) return alpha_ * conjugate(*base_, y).value;
  return 0.5 * y.dot(B_ * y) + b_.dot(y) + c_;
}

Vec2 Psi::gradient(const Vec2& y) const {
  if (kind_ == Kind::ScaledConjugate) return alpha_ * conjugate(*base_, y).gradient;
  return B_ * y + b_;
}

Mat2 Psi::hessian(const Vec2& y) const {
  if (kind_ == Kind::ScaledConjugate) {
    const Vec2 z = conjugate(*base_, y).gradient;
    return alpha_ * base_->hessian(z).inverse();
  }
  return B_;
}

bool Psi::is_scaled_conjugate_of(const Potential& u) const {
  return kind_ == Kind::ScaledConjugate && *base_ == u;
}

std::string Psi::name() const {
  std::ostringstream s;
  if (kind_ == Kind::ScaledConjugate) {
    s << alpha_ << "*conj(" << base_->name() << ")";
  } else if (is_zero()) {
    s << "zero";
  } else {
    s << "quadratic(B=" << B_(0, 0) << "," << B_(0, 1) << "," << B_(1, 1) << "; b=" << b_.x()
      << "," << b_.y() << "; c=" << c_ << ")";
  }
  return s.str();
}

Psi::AtGradient Psi::at_gradient(const Potential& u, const Vec2& x) const {
  if (is_scaled_conjugate_of(u)) {
    const auto e = u.eval(x);
    return {alpha_ * (x.dot(e.gradient) - e.value), alpha_ * x};
  }
  const Vec2 g = u.gradient(x);
  return {value(g), gradient(g)};
}

InteriorField Psi::composed_with_gradient(const Potential& u) const {
  Psi self = *this;
  return InteriorField([self, u](const Vec2& x) { return self.at_gradient(u, x).value; },
                       [self, u](const Vec2& x) {
                         return (u.hessian(x) * self.at_gradient(u, x).gradient).eval();
                       });
}

FlowPoint conjugate_flow_newton(const Potential& u, const Psi& psi, double t, const Vec2& x) {
  if (u.is_lebesgue()) {
    throw Error(ErrorKind::LebesgueModeRestriction, "conjugate flow needs a strictly convex u");
  }
  // Φ(y) = u*(y) + tψ(y) − ⟨x,y⟩; ∇Φ = ∇u*(y) + t∇ψ(y) − x.
  auto fn = [&](const Vec2& y) {
    const auto c = conjugate(u, y);
    const Mat2 H = u.hessian(c.gradient).inverse() + t * psi.hessian(y);
    return Objective{c.value + t * psi.value(y) - x.dot(y), c.gradient + t * psi.gradient(y) - x,
                     H};
  };
  const Vec2 y = damped_newton(fn, u.gradient(x), kNewtonTol * std::max(1.0, x.norm()),
                               ErrorKind::FlowNotConvex, "conjugate flow", nullptr);
  const auto obj = fn(y);
  if (!is_positive_definite(obj.hessian)) {
    throw Error(ErrorKind::FlowNotConvex, "u* + tψ is not strictly convex at the maximizer");
  }
  return {-obj.value, y, obj.hessian.inverse()};
}

FlowPoint conjugate_flow(const Potential& u, const Psi& psi, double t, const Vec2& x) {
  if (u.is_lebesgue()) {
    throw Error(ErrorKind::LebesgueModeRestriction, "conjugate flow needs a strictly convex u");
  }
  if (t == 0.0 || psi.is_zero()) {
    const auto e = u.eval(x);
    return {e.value, e.gradient, e.hessian};
  }
  if (psi.is_scaled_conjugate_of(u)) {
    // (λu*)* = λ·u(·/λ).
    const double lambda = 1.0 + t * psi.alpha();
    if (!(lambda > 0.0)) {
      throw Error(ErrorKind::FlowNotConvex, "1 + tα must be positive");
    }
    const auto e = u.eval(x / lambda);
    return {lambda * e.value, e.gradient, e.hessian / lambda};
  }
  if (u.is_quadratic() && psi.kind() == Psi::Kind::Quadratic) {
    // u* + tψ = ½⟨Qy,y⟩ + ⟨l,y⟩ + k.
    const Mat2 Q = u.matrix().inverse() + t * psi.B();
    if (!is_positive_definite(Q)) {
      throw Error(ErrorKind::FlowNotConvex, "A⁻¹ + tB is not positive definite");
    }
    const Vec2 l = u.shift() + t * psi.b();
    const double k = t * psi.c() - u.offset();
    const Mat2 Qi = Q.inverse();
    const Vec2 g = Qi * (x - l);
    return {0.5 * (x - l).dot(g) - k, g, Qi};
  }
  return conjugate_flow_newton(u, psi, t, x);
}

FlowDerivatives flow_derivatives(const Potential& u, const Psi& psi, double t, const Vec2& x) {
  const FlowPoint p = conjugate_flow(u, psi, t, x);
  const double v = psi.value(p.gradient);
  const Vec2 g = psi.gradient(p.gradient);
  return {-v, g.dot(p.hessian * g)};
}

double weighted_mean_curvature(const SupportFunction& h, const Potential& u, double theta) {
  const BoundaryPoint p = h.point_at(theta);
  return 1.0 / p.radius - u.gradient(p.x).dot(p.normal);
}

DerivativeConsistency check_derivatives(const Potential& u, int probes, double R,
                                        std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  DerivativeConsistency out;
  for (int i = 0; i < probes; ++i) {
    const double s = R * std::sqrt(radius(rng));
    const Vec2 x = s * unit_normal(angle(rng));
    const double step = 1e-5 * std::max(1.0, x.norm());
    const auto e = u.eval(x);
    Vec2 fd_grad;
    Mat2 fd_hess;
    for (int k = 0; k < 2; ++k) {
      const Vec2 dx = step * Vec2::Unit(k);
      const auto ep = u.eval(x + dx);
      const auto em = u.eval(x - dx);
      fd_grad(k) = (ep.value - em.value) / (2.0 * step);
      fd_hess.col(k) = (ep.gradient - em.gradient) / (2.0 * step);
    }
    const double gs = std::max(1.0, e.gradient.norm());
    const double hs = std::max(1.0, e.hessian.norm());
    out.gradient_error = std::max(out.gradient_error, (fd_grad - e.gradient).norm() / gs);
    out.hessian_error = std::max(out.hessian_error, (fd_hess - e.hessian).norm() / hs);
  }
  return out;
}

PinchingCheck check_pinching(const Potential& u, const std::vector<Vec2>& points) {
  if (!u.pinching()) {
    throw Error(ErrorKind::PinchingUndeclared, "potential " + u.name() + " declares no pinching");
  }
  const Pinching& k = *u.pinching();
  PinchingCheck out;
  out.min_eigenvalue = std::numeric_limits<double>::infinity();
  out.max_trace = -std::numeric_limits<double>::infinity();
  for (const auto& x : points) {
    const Mat2 H = u.hessian(x);
    Eigen::SelfAdjointEigenSolver<Mat2> es(H, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = std::min(out.min_eigenvalue, es.eigenvalues()(0));
    out.max_trace = std::max(out.max_trace, H.trace());
  }
  const double slack = 1e-12;
  out.ok = out.min_eigenvalue >= k.k1 * (1.0 - slack) && out.max_trace <= 2.0 * k.k2 * (1.0 + slack);
  return out;
}

}  // namespace bpl
