// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "bpl/fields.hpp"
#include "bpl/geometry.hpp"
#include "bpl/measure.hpp"

namespace bpl {

struct QuadratureConfig {
  int M = kDefaultGridSize;  ///< trapezoidal nodes in θ
  int Q = 32;                ///< Gauss–Legendre nodes in s ∈ [0,1]
  /// Throws InvalidArgument unless M ≥ 64 is even and Q ≥ 16.
  void validate() const;
  [[nodiscard]] QuadratureConfig doubled() const { return {2 * M, 2 * Q}; }
};

/// Sum with a fixed binary tree over the input order.
double pairwise_sum(std::span<const double> v);

struct GaussLegendreRule {
  std::vector<double> nodes;    ///< in (0,1), ascending
  std::vector<double> weights;  ///< sum to 1
};
GaussLegendreRule gauss_legendre_unit(int Q);

/// Tensor nodes on K and ∂K with μ-weights, built once per (body, potential).
///
/// Boundary nodes carry dμ = e^{−u} r dθ; interior nodes come from the
/// polar map (s,θ) ↦ s·x(θ), whose Jacobian is s·h(θ)·r(θ).
class WeightedBody {
 public:
  struct InteriorNode {
    Vec2 x;
    double weight;  ///< includes e^{−u}
    Potential::Eval u;
  };

  WeightedBody(const SupportFunction& h, const Potential& u, QuadratureConfig cfg = {});

  [[nodiscard]] const SupportFunction& body() const noexcept { return h_; }
  [[nodiscard]] const Potential& potential() const noexcept { return u_; }
  [[nodiscard]] const QuadratureConfig& config() const noexcept { return cfg_; }
  [[nodiscard]] int M() const noexcept { return cfg_.M; }

  [[nodiscard]] const BoundaryPoint& node(int j) const { return nodes_[j]; }
  [[nodiscard]] const std::vector<BoundaryPoint>& nodes() const noexcept { return nodes_; }
  /// e^{−u} r 2π/M.
  [[nodiscard]] const std::vector<double>& boundary_weights() const noexcept { return wb_; }
  /// e^{−u} 2π/M (the weight of ρ0′ρ1′ in the P form).
  [[nodiscard]] const std::vector<double>& arc_weights() const noexcept { return wa_; }
  [[nodiscard]] const std::vector<Vec2>& boundary_gradients() const noexcept { return grad_; }
  /// H_μ at boundary nodes.
  [[nodiscard]] const std::vector<double>& mean_curvature() const noexcept { return H_; }
  [[nodiscard]] const std::vector<InteriorNode>& interior() const noexcept { return interior_; }

  [[nodiscard]] double mu_K() const noexcept { return muK_; }
  [[nodiscard]] double mu_boundary() const noexcept { return muB_; }

  /// ∫_∂K g dμ for nodal values g_j.
  [[nodiscard]] double boundary_integral(std::span<const double> values) const;
  [[nodiscard]] double boundary_integral(const BoundaryField& g) const;
  [[nodiscard]] double boundary_integral(const std::function<double(const BoundaryPoint&)>& g) const;
  /// ∫_K g dμ.
  [[nodiscard]] double interior_integral(const InteriorField& g) const;
  [[nodiscard]] double interior_integral(const std::function<double(const InteriorNode&)>& g) const;

 private:
  SupportFunction h_;
  Potential u_;
  QuadratureConfig cfg_;
  std::vector<BoundaryPoint> nodes_;
  std::vector<double> wb_;
  std::vector<double> wa_;
  std::vector<Vec2> grad_;
  std::vector<double> H_;
  std::vector<InteriorNode> interior_;
  double muK_ = 0.0;
  double muB_ = 0.0;
};

double boundary_integral(const SupportFunction& h, const Potential& u, const BoundaryField& g,
                         QuadratureConfig cfg = {});
double interior_integral(const SupportFunction& h, const Potential& u, const InteriorField& g,
                         QuadratureConfig cfg = {});
/// ∫_K density(x) dx for an arbitrary density (used for flowed potentials).
double integrate_density(const SupportFunction& h, const std::function<double(const Vec2&)>& density,
                         QuadratureConfig cfg = {});

}  // namespace bpl
