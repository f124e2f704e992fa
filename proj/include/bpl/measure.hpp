// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bpl/fields.hpp"
#include "bpl/geometry.hpp"

namespace bpl {

/// k₁·Id ≤ ∇²u and Δu ≤ 2k₂.
struct Pinching {
  double k1 = 1.0;
  double k2 = 1.0;
  [[nodiscard]] double ratio() const noexcept { return k2 / k1; }
};

enum class PotentialKind { Gaussian, Quadratic, EvenQuartic, Zero };

/// Smooth convex potential u(x) = v(x − shift) + offset for a built-in
/// profile v. The measure is μ = e^{−u} dx.
class Potential {
 public:
  struct Eval {
    double value = 0.0;
    Vec2 gradient = Vec2::Zero();
    Mat2 hessian = Mat2::Zero();
  };

  static Potential gaussian();
  /// ½⟨Ax,x⟩; throws NotConvexPotential unless A is SPD.
  static Potential quadratic(const Mat2& A);
  /// ½‖x‖² + ε‖x‖⁴, ε ≥ 0.
  static Potential even_quartic(double epsilon);
  /// u ≡ 0 (Lebesgue measure).
  static Potential zero();

  [[nodiscard]] Potential shifted(const Vec2& by) const;
  [[nodiscard]] Potential plus_constant(double c) const;
  [[nodiscard]] Potential with_pinching(const Pinching& p) const;

  [[nodiscard]] Eval eval(const Vec2& x) const;
  [[nodiscard]] double value(const Vec2& x) const;
  [[nodiscard]] Vec2 gradient(const Vec2& x) const;
  [[nodiscard]] Mat2 hessian(const Vec2& x) const { return eval(x).hessian; }

  [[nodiscard]] PotentialKind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_lebesgue() const noexcept { return kind_ == PotentialKind::Zero; }
  [[nodiscard]] bool is_even() const noexcept { return shift_.squaredNorm() == 0.0; }
  /// Gaussian and quadratic profiles.
  [[nodiscard]] bool is_quadratic() const noexcept {
    return kind_ == PotentialKind::Gaussian || kind_ == PotentialKind::Quadratic;
  }
  [[nodiscard]] const Mat2& matrix() const noexcept { return A_; }
  [[nodiscard]] double epsilon() const noexcept { return eps_; }
  [[nodiscard]] const Vec2& shift() const noexcept { return shift_; }
  [[nodiscard]] double offset() const noexcept { return offset_; }
  [[nodiscard]] const std::optional<Pinching>& pinching() const noexcept { return pinching_; }
  [[nodiscard]] std::string name() const;

  friend bool operator==(const Potential& a, const Potential& b);

 private:
  Potential(PotentialKind kind, Mat2 A, double eps) : kind_(kind), A_(std::move(A)), eps_(eps) {}

  PotentialKind kind_;
  Mat2 A_;
  double eps_;
  Vec2 shift_ = Vec2::Zero();
  double offset_ = 0.0;
  std::optional<Pinching> pinching_;
};

struct PotentialDescriptor {
  std::string kind = "gaussian";  ///< gaussian | quadratic | even-quartic | zero
  Mat2 A = Mat2::Identity();
  double epsilon = 0.0;
  Vec2 shift = Vec2::Zero();
  double offset = 0.0;
  std::optional<Pinching> pinching;  ///< overrides the auto-filled constants
};

Potential make_potential(const PotentialDescriptor& desc);

struct ConjugateResult {
  double value = 0.0;
  Vec2 gradient = Vec2::Zero();  ///< z with ∇u(z) = y
  int iterations = 0;
};

/// u*(y) = sup_z ⟨y,z⟩ − u(z) by damped Newton started at z = y.
ConjugateResult conjugate(const Potential& u, const Vec2& y);

/// Perturbation ψ of the conjugate potential, with analytic derivatives.
class Psi {
 public:
  enum class Kind { Quadratic, ScaledConjugate };

  static Psi zero();
  static Psi affine(const Vec2& b, double c = 0.0);
  /// ½⟨By,y⟩ + ⟨b,y⟩ + c.
  static Psi quadratic(const Mat2& B, const Vec2& b = Vec2::Zero(), double c = 0.0);
  /// α·u*.
  static Psi scaled_conjugate(const Potential& u, double alpha);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] double value(const Vec2& y) const;
  [[nodiscard]] Vec2 gradient(const Vec2& y) const;
  [[nodiscard]] Mat2 hessian(const Vec2& y) const;

  [[nodiscard]] const Mat2& B() const noexcept { return B_; }
  [[nodiscard]] const Vec2& b() const noexcept { return b_; }
  [[nodiscard]] double c() const noexcept { return c_; }
  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  /// True when ψ = α·u* for this very u.
  [[nodiscard]] bool is_scaled_conjugate_of(const Potential& u) const;
  [[nodiscard]] std::string name() const;

  /// ψ(∇u(x)) and ∇ψ(∇u(x)); the Young identity replaces the conjugate
  /// solve when ψ = α·u*.
  struct AtGradient {
    double value = 0.0;
    Vec2 gradient = Vec2::Zero();
  };
  [[nodiscard]] AtGradient at_gradient(const Potential& u, const Vec2& x) const;
  /// φ = ψ∘∇u with analytic gradient ∇²u·∇ψ(∇u).
  [[nodiscard]] InteriorField composed_with_gradient(const Potential& u) const;

 private:
  Psi() = default;

  Kind kind_ = Kind::Quadratic;
  Mat2 B_ = Mat2::Zero();
  Vec2 b_ = Vec2::Zero();
  double c_ = 0.0;
  double alpha_ = 0.0;
  std::optional<Potential> base_;
};

struct FlowPoint {
  double value = 0.0;
  Vec2 gradient = Vec2::Zero();
  Mat2 hessian = Mat2::Zero();
};

/// u_t(x) = (u* + tψ)*(x). Dispatches to a closed form for t = 0, for
/// ψ = α·u*, and for quadratic u with quadratic ψ; otherwise Newton.
FlowPoint conjugate_flow(const Potential& u, const Psi& psi, double t, const Vec2& x);
/// The Newton path only: minimizes u*(y) + tψ(y) − ⟨x,y⟩ from y = ∇u(x).
FlowPoint conjugate_flow_newton(const Potential& u, const Psi& psi, double t, const Vec2& x);

struct FlowDerivatives {
  double first = 0.0;   ///< ∂_t u_t(x)
  double second = 0.0;  ///< ∂²_t u_t(x)
};
FlowDerivatives flow_derivatives(const Potential& u, const Psi& psi, double t, const Vec2& x);

/// H_μ(θ) = 1/r(θ) − ⟨∇u(x(θ)), ν(θ)⟩.
double weighted_mean_curvature(const SupportFunction& h, const Potential& u, double theta);

struct DerivativeConsistency {
  double gradient_error = 0.0;  ///< max relative deviation from central differences
  double hessian_error = 0.0;
  [[nodiscard]] bool ok(double tol = 1e-6) const noexcept {
    return gradient_error <= tol && hessian_error <= tol;
  }
};
/// Compares ∇u, ∇²u with central differences at random points of radius ≤ R.
DerivativeConsistency check_derivatives(const Potential& u, int probes, double R,
                                        std::mt19937_64& rng);

struct PinchingCheck {
  double min_eigenvalue = 0.0;  ///< over the probed nodes
  double max_trace = 0.0;
  bool ok = false;
};
/// Eigenvalue and trace checks of the declared pinching on the given points.
PinchingCheck check_pinching(const Potential& u, const std::vector<Vec2>& points);

}  // namespace bpl
