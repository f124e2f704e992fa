// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bpl/fields.hpp"
#include "bpl/quad.hpp"

namespace bpl {

inline constexpr int kDefaultModes = 16;

/// e₀ = 1, then cos kθ, sin kθ for k = 1..N (or k = 2, 4, ..., N when
/// restricted to the even subspace).
class Basis {
 public:
  explicit Basis(int N, bool even_only = false);

  [[nodiscard]] int order() const noexcept { return N_; }
  [[nodiscard]] bool even_only() const noexcept { return even_only_; }
  [[nodiscard]] int dim() const noexcept { return static_cast<int>(freq_.size()); }
  [[nodiscard]] int frequency(int j) const { return freq_[j]; }
  [[nodiscard]] bool is_sine(int j) const { return sine_[j]; }

  /// Values and θ-derivatives of every basis function on the M-grid
  /// (rows = nodes).
  [[nodiscard]] Eigen::MatrixXd values(int M) const;
  [[nodiscard]] Eigen::MatrixXd derivatives(int M) const;

  [[nodiscard]] TrigSeries to_series(const Eigen::VectorXd& c) const;
  /// Coefficients of the series on this basis (modes outside are dropped).
  [[nodiscard]] Eigen::VectorXd project(const TrigSeries& s) const;

 private:
  int N_;
  bool even_only_;
  std::vector<int> freq_;
  std::vector<bool> sine_;
};

/// Galerkin matrices of ⟨·,·⟩_P on a trigonometric basis.
struct PoincareSystem {
  Basis basis{kDefaultModes};
  Eigen::MatrixXd A;  ///< ∫ e_j′e_k′ e^{−u} dθ
  Eigen::MatrixXd B;  ///< ∫ H_μ e_j e_k dμ
  Eigen::VectorXd m;  ///< ∫ e_j dμ
  double muK = 0.0;
  /// A − B + mmᵀ/μ(K); for u ≡ 0 the first harmonics (the kernel) are pinned.
  Eigen::MatrixXd G;
  Eigen::LLT<Eigen::MatrixXd> chol;

  /// e_j e_k integrated against dμ, and e_j′e_k′/r² against dμ.
  Eigen::MatrixXd mass;
  Eigen::MatrixXd h1_gradient;
};

/// Throws CoercivityFailure if G is not positive definite.
PoincareSystem assemble(const WeightedBody& wb, int N = kDefaultModes, bool even_only = false);

struct RhoBarSolution {
  BoundaryField rho;
  Eigen::VectorXd coeffs;
  double energy = 0.0;       ///< ⟨ρ̄,ρ̄⟩_P = mᵀc = ∫ρ̄ dμ
  double p = 0.0;            ///< μ(K)/∫ρ̄ dμ
  double condition = 0.0;    ///< λ_max/λ_min of G
};

RhoBarSolution solve_rho_bar(const PoincareSystem& sys);
double concavity_power(const WeightedBody& wb, int N = kDefaultModes, bool even_only = false);

/// 𝓛ρ = −ρ″/r + ⟨∇u,τ⟩ρ′ − H_μρ + (1/μ(K))∫ρ dμ on the quadrature grid.
std::vector<double> apply_L_nodal(const WeightedBody& wb, const BoundaryField& rho);
/// The trigonometric interpolant of apply_L_nodal.
BoundaryField apply_L(const WeightedBody& wb, const BoundaryField& rho);

struct SupportIdentityReport {
  double pointwise_residual = 0.0;  ///< sup |𝓛h − 1 − g + ḡ|, g = ⟨∇u,x⟩
  double integral_residual = 0.0;   ///< |∫_∂K h − 2μ(K) + ∫_K g|
  double scale = 1.0;
  bool pass = false;                ///< both ≤ 1e-8·scale
};
SupportIdentityReport support_identity_check(const WeightedBody& wb);

/// J(ρ) = μ(K)⟨ρ,ρ⟩_P/(∫ρ dμ)²; throws ZeroMean.
double rayleigh(const WeightedBody& wb, const BoundaryField& rho);

}  // namespace bpl
