// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "bpl/fields.hpp"
#include "bpl/measure.hpp"
#include "bpl/quad.hpp"

namespace bpl {

/// Joint perturbation K_t = [h + tf], u_t = (u* + tψ)*.
struct FlowConfig {
  BoundaryField f;
  Psi psi = Psi::zero();
  double epsilon = 0.1;
  int points = 21;  ///< odd, symmetric around t = 0
};

/// X_t(x) = x + t‖x‖_K ∇f(ν(x/‖x‖_K)) with ∇f(ν) = f′τ + fν.
Vec2 vector_field_X(const SupportFunction& h, const BoundaryField& f, double t, const Vec2& x);

/// I(t) = ∫_{K_t} e^{−u_t} dx.
double flow_I(const SupportFunction& h, const Potential& u, const BoundaryField& f, const Psi& psi,
              double t, QuadratureConfig cfg = {});

struct MarginalTable {
  std::vector<double> t;
  std::vector<double> I;
  std::vector<double> S;            ///< log I
  std::vector<double> second_diff;  ///< S_{i+1} − 2S_i + S_{i−1}, interior nodes
  double epsilon = 0.0;             ///< after halving to admissibility
  int halvings = 0;
  double max_second_diff = 0.0;
  [[nodiscard]] bool concave(double tol = 1e-7) const { return max_second_diff <= tol; }
};

/// Tabulates S(t) on the symmetric grid, halving ε until every node is
/// admissible.
MarginalTable marginal_S(const SupportFunction& h, const Potential& u, const FlowConfig& cfg,
                         QuadratureConfig qcfg = {});

struct ShapeDerivatives {
  double I0 = 0.0;
  double I1 = 0.0;
  double I2 = 0.0;
  double S2 = 0.0;  ///< I2/I0 − (I1/I0)²
};

/// Closed-form first and second derivatives of I at t = 0.
ShapeDerivatives shape_derivatives(const WeightedBody& wb, const BoundaryField& f, const Psi& psi);

struct FiniteDifferenceDerivatives {
  double I1 = 0.0;  ///< central difference, step h1
  double I2 = 0.0;  ///< second central difference, step h2
};
FiniteDifferenceDerivatives fd_shape_derivatives(const SupportFunction& h, const Potential& u,
                                                 const BoundaryField& f, const Psi& psi,
                                                 double h1 = 1e-4, double h2 = 1e-3,
                                                 QuadratureConfig cfg = {});

struct MeanFormFromFlow {
  double flow_value = 0.0;   ///< I(0)·S″(0)
  double forms_value = 0.0;  ///< −(P + BL − 2I) for ρ = f, φ = ψ∘∇u
  double difference = 0.0;
  double scale = 1.0;        ///< max(|P|, |BL|, 1)
};
MeanFormFromFlow mean_form_from_flow(const WeightedBody& wb, const BoundaryField& f, const Psi& psi);

}  // namespace bpl
