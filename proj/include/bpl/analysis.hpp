// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <random>
#include <vector>

#include "bpl/pde.hpp"

namespace bpl {

struct Lambda1Result {
  double value = std::numeric_limits<double>::infinity();
  double lambda_max = 0.0;  ///< sup energy/stiffness on non-constant fields
  bool infinite = true;     ///< the discretized energy is never positive
};

/// Best λ₁ with energy ≤ stiffness/λ₁, where energy = ∫H_μρ² − (∫ρ)²/μ(K).
/// The stiffness ignores constants, so the constant coefficient is chosen
/// to maximize the energy (a Schur complement, since E₀₀ < 0).
Lambda1Result lambda1(const PoincareSystem& sys);

/// Smallest eigenvalue of the pencil (G, S) with S the H¹(∂K, μ) Gram matrix.
double coercivity_constant(const PoincareSystem& sys);

/// ‖ρ‖²_{H¹} = ∫ρ² dμ + ∫(ρ′/r)² dμ.
double h1_norm_sq(const WeightedBody& wb, const BoundaryField& rho);

struct StabilityScaling {
  double slope = 0.0;     ///< d log‖ρ_δ‖_{H¹} / d log ⟨ρ_δ,ρ_δ⟩_P
  double constant = 0.0;  ///< 1/√C
  double worst_ratio = 0.0;  ///< max ‖ρ_δ‖_{H¹} / (√deficit/√C), ≤ 1
};
StabilityScaling stability_scaling(const WeightedBody& wb, const PoincareSystem& sys,
                                   const BoundaryField& rho0, const std::vector<double>& deltas);

/// ∫ρ² dμ / (⟨ρ,ρ⟩_P^{1/2} ‖ρ‖_{H¹}).
double interpolation_ratio(const WeightedBody& wb, const BoundaryField& rho);

struct InterpolationResult {
  double max_ratio = 0.0;
  double max_ratio_half = 0.0;  ///< over the first half of the sample
  [[nodiscard]] double growth() const { return max_ratio / max_ratio_half - 1.0; }
};
InterpolationResult interpolation_constant(const WeightedBody& wb, int sample_size,
                                           std::mt19937_64& rng, int order = 6);

struct BMReport {
  double p = 0.0;
  std::vector<double> t;
  std::vector<double> mu;     ///< μ((1−t)K + tL)
  std::vector<double> slack;  ///< μ_t^p − (1−t)μ(K)^p − tμ(L)^p
  double min_slack = 0.0;
  bool pass = false;          ///< min_slack ≥ −1e-9
  /// Smallest local concavity power along the segment (NaN unless probed).
  double local_p_min = std::numeric_limits<double>::quiet_NaN();
};
BMReport bm_check(const SupportFunction& hK, const SupportFunction& hL, const Potential& u, double p,
                  int t_nodes = 21, QuadratureConfig cfg = {}, bool probe_local = false,
                  int N = kDefaultModes);

/// Second central difference of t ↦ μ([h + tf])^p at 0; p = 0 means log μ.
double local_concavity_fd(const SupportFunction& h, const Potential& u, const BoundaryField& f,
                          double p, double step = 1e-3, QuadratureConfig cfg = {});

struct ReformulationReport {
  double p = 0.0;
  double interaction = 0.0;  ///< ⟨ρ̄, g⟩_I + ∫_K g dμ with g = ⟨∇u, x⟩
  double closed_form = 0.0;  ///< μ(K)(2 − 1/p)
  double identity_lhs = 0.0;  ///< ∫_∂K h dμ − ∫_∂K ρ̄ dμ
  double identity_rhs = 0.0;  ///< ⟨ρ̄, g⟩_I
  double identity_residual = 0.0;  ///< relative
  bool sign_agrees = false;
  bool symmetric_setting = false;
};
ReformulationReport reformulation_check(const WeightedBody& wb, int N = kDefaultModes);

struct PinchingBoundsReport {
  double k1 = 0.0;
  double k2 = 0.0;
  double moment = 0.0;  ///< (1/μ(K)) ∫⟨(∇²u)⁻¹∇u, ∇u⟩ dμ
  double p = 0.0;
  bool radial_bound = false;   ///< moment ≤ 2k₂/k₁
  bool general_bound = false;  ///< 1/p ≤ 2 + moment
  bool power_bound = false;    ///< p ≥ 1/(2(k₂/k₁ + 1))
  bool pinching_on_nodes = false;
  bool symmetric_setting = false;
  [[nodiscard]] bool pass() const {
    return radial_bound && general_bound && power_bound && pinching_on_nodes;
  }
};
/// Throws PinchingUndeclared when u carries no pinching constants.
PinchingBoundsReport pinching_bounds(const WeightedBody& wb, int N = kDefaultModes);

}  // namespace bpl
