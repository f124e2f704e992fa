// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bpl/fields.hpp"
#include "bpl/quad.hpp"

namespace bpl {

/// ⟨ρ0,ρ1⟩_P. In the plane ⟨II⁻¹∇ρ0,∇ρ1⟩ dℋ¹ reduces to ρ0′ρ1′ dθ.
double form_P(const WeightedBody& wb, const BoundaryField& rho0, const BoundaryField& rho1);

/// ⟨φ0,φ1⟩_BL. Missing gradients fall back to central differences with
/// step 1e-5·diameter; `used_fallback` reports whether that happened.
double form_BL(const WeightedBody& wb, const InteriorField& phi0, const InteriorField& phi1,
               bool* used_fallback = nullptr);

/// ⟨ρ,φ⟩_I.
double form_I(const WeightedBody& wb, const BoundaryField& rho, const InteriorField& phi);

struct FormsReport {
  double P = 0.0;
  double BL = 0.0;
  double I = 0.0;
  double scale = 1.0;       ///< max(|P|, |BL|, 1)
  double slack_mean = 0.0;  ///< (P + BL)/2 − I
  double slack_mult = 0.0;  ///< P·BL − I²
  bool pass_mean = false;   ///< slack_mean ≥ −1e-9·scale
  bool pass_mult = false;   ///< slack_mult ≥ −1e-9·scale²
  bool gradient_fallback = false;
};

FormsReport evaluate_forms(const WeightedBody& wb, const BoundaryField& rho, const InteriorField& phi);
FormsReport check_mean_form(const WeightedBody& wb, const BoundaryField& rho, const InteriorField& phi);
FormsReport check_multiplicative(const WeightedBody& wb, const BoundaryField& rho,
                                 const InteriorField& phi);

struct FieldPair {
  BoundaryField rho;
  InteriorField phi;
};

/// ρ = α(h + ⟨x₀,ν⟩), φ(x) = α·u*(∇u(x − x₀)) + z, with u*∘∇u taken from
/// the Young identity.
FieldPair equality_witness(const SupportFunction& h, const Potential& u, double alpha,
                           const Vec2& x0, double z);

/// ρ = ⟨x₀,ν⟩, φ = ⟨x₀,∇u⟩ + z: the infinitesimal translation of (K, μ).
FieldPair translation_pair(const Potential& u, const Vec2& x0, double z);

}  // namespace bpl
