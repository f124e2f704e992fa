// SPDX-License-Identifier: Apache-2.0
#include "bpl/forms.hpp"

#include <algorithm>
#include <cmath>

#include "bpl/errors.hpp"

namespace bpl {

double form_P(const WeightedBody& wb, const BoundaryField& rho0, const BoundaryField& rho1) {
  const int M = wb.M();
  const auto a = rho0.sample(M);
  const auto b = rho1.sample(M);
  std::vector<double> grad(M);
  std::vector<double> curv(M);
  for (int j = 0; j < M; ++j) {
    grad[j] = a.d1[j] * b.d1[j] * wb.arc_weights()[j];
    curv[j] = wb.mean_curvature()[j] * a.value[j] * b.value[j];
  }
  const double ia = wb.boundary_integral(a.value);
  const double ib = wb.boundary_integral(b.value);
  return pairwise_sum(grad) - wb.boundary_integral(curv) + ia * ib / wb.mu_K();
}

double form_BL(const WeightedBody& wb, const InteriorField& phi0, const InteriorField& phi1,
               bool* used_fallback) {
  if (wb.potential().is_lebesgue()) {
    throw Error(ErrorKind::LebesgueModeRestriction,
                "the BL form needs an invertible Hessian; the zero potential has none");
  }
  const double step = 1e-5 * wb.body().diameter_bound();
  if (used_fallback) *used_fallback = !phi0.has_gradient() || !phi1.has_gradient();
  const double cross = wb.interior_integral([&](const WeightedBody::InteriorNode& n) {
    const Vec2 g0 = phi0.gradient(n.x, step);
    const Vec2 g1 = phi1.gradient(n.x, step);
    return g1.dot(n.u.hessian.ldlt().solve(g0));
  });
  const double prod = wb.interior_integral(
      [&](const WeightedBody::InteriorNode& n) { return phi0(n.x) * phi1(n.x); });
  const double i0 = wb.interior_integral(phi0);
  const double i1 = wb.interior_integral(phi1);
  return cross - prod + i0 * i1 / wb.mu_K();
}

double form_I(const WeightedBody& wb, const BoundaryField& rho, const InteriorField& phi) {
  const auto r = rho.sample(wb.M());
  std::vector<double> v(wb.M());
  for (int j = 0; j < wb.M(); ++j) v[j] = r.value[j] * phi(wb.node(j).x);
  return wb.boundary_integral(v) - wb.boundary_integral(r.value) * wb.interior_integral(phi) / wb.mu_K();
}

FormsReport evaluate_forms(const WeightedBody& wb, const BoundaryField& rho, const InteriorField& phi) {
  FormsReport r;
  r.P = form_P(wb, rho, rho);
  r.BL = form_BL(wb, phi, phi, &r.gradient_fallback);
  r.I = form_I(wb, rho, phi);
  r.scale = std::max({std::abs(r.P), std::abs(r.BL), 1.0});
  r.slack_mean = 0.5 * (r.P + r.BL) - r.I;
  r.slack_mult = r.P * r.BL - r.I * r.I;
  r.pass_mean = r.slack_mean >= -1e-9 * r.scale;
  r.pass_mult = r.slack_mult >= -1e-9 * r.scale * r.scale;
  return r;
}

FormsReport check_mean_form(const WeightedBody& wb, const BoundaryField& rho, const InteriorField& phi) {
  return evaluate_forms(wb, rho, phi);
}

FormsReport check_multiplicative(const WeightedBody& wb, const BoundaryField& rho,
                                 const InteriorField& phi) {
  return evaluate_forms(wb, rho, phi);
}

FieldPair equality_witness(const SupportFunction& h, const Potential& u, double alpha,
                           const Vec2& x0, double z) {
  if (u.is_lebesgue()) {
    throw Error(ErrorKind::LebesgueModeRestriction, "the witness needs a strictly convex u");
  }
  TrigSeries rho = h.series() + TrigSeries({0.0, x0.x()}, {0.0, x0.y()});
  rho *= alpha;
  // u*(∇u(y)) = ⟨y,∇u(y)⟩ − u(y), whose gradient in y is ∇²u(y)·y.
  InteriorField phi(
      [u, alpha, x0, z](const Vec2& x) {
        const Vec2 y = x - x0;
        const auto e = u.eval(y);
        return alpha * (y.dot(e.gradient) - e.value) + z;
      },
      [u, alpha, x0](const Vec2& x) {
        const Vec2 y = x - x0;
        return (alpha * (u.hessian(y) * y)).eval();
      });
  return {BoundaryField(std::move(rho)), std::move(phi)};
}

FieldPair translation_pair(const Potential& u, const Vec2& x0, double z) {
  BoundaryField rho(TrigSeries({0.0, x0.x()}, {0.0, x0.y()}));
  InteriorField phi([u, x0, z](const Vec2& x) { return x0.dot(u.gradient(x)) + z; },
                    [u, x0](const Vec2& x) { return (u.hessian(x) * x0).eval(); });
  return {std::move(rho), std::move(phi)};
}

}  // namespace bpl
