// SPDX-License-Identifier: Apache-2.0
#include "bpl/flow.hpp"

#include <algorithm>
#include <cmath>

#include "bpl/errors.hpp"
#include "bpl/forms.hpp"

namespace bpl {

Vec2 vector_field_X(const SupportFunction& h, const BoundaryField& f, double t, const Vec2& x) {
  const GaugeResult g = gauge(h, x);
  if (g.value == 0.0) return x;
  const Vec2 grad_f = f.derivative(g.theta) * unit_tangent(g.theta) + f(g.theta) * unit_normal(g.theta);
  return x + t * g.value * grad_f;
}

double flow_I(const SupportFunction& h, const Potential& u, const BoundaryField& f, const Psi& psi,
              double t, QuadratureConfig cfg) {
  const SupportFunction Kt = wulff_perturb(h.with_grid(cfg.M), f, t);
  if (psi.is_zero() || t == 0.0) {
    return integrate_density(Kt, [&u](const Vec2& x) { return std::exp(-u.value(x)); }, cfg);
  }
  return integrate_density(
      Kt, [&](const Vec2& x) { return std::exp(-conjugate_flow(u, psi, t, x).value); }, cfg);
}

MarginalTable marginal_S(const SupportFunction& h, const Potential& u, const FlowConfig& cfg,
                         QuadratureConfig qcfg) {
  if (cfg.points < 3 || cfg.points % 2 == 0) {
    throw Error(ErrorKind::InvalidArgument, "flow grid needs an odd number (>= 3) of points");
  }
  if (u.is_lebesgue() && !cfg.psi.is_zero()) {
    throw Error(ErrorKind::LebesgueModeRestriction, "the potential perturbation needs u != 0");
  }
  MarginalTable out;
  double eps = cfg.epsilon;
  for (int attempt = 0; attempt < 30; ++attempt, eps *= 0.5) {
    out.t.clear();
    out.I.clear();
    bool admissible = true;
    for (int i = 0; i < cfg.points && admissible; ++i) {
      const double t = -eps + 2.0 * eps * i / (cfg.points - 1);
      try {
        out.I.push_back(flow_I(h, u, cfg.f, cfg.psi, t, qcfg));
        out.t.push_back(t);
      } catch (const Error& e) {
        const auto k = e.kind();
        if (k != ErrorKind::PerturbationTooLarge && k != ErrorKind::FlowNotConvex &&
            k != ErrorKind::OriginOutside) {
          throw;
        }
        admissible = false;
      }
    }
    if (!admissible) {
      ++out.halvings;
      continue;
    }
    out.epsilon = eps;
    out.S.resize(out.I.size());
    std::transform(out.I.begin(), out.I.end(), out.S.begin(), [](double v) { return std::log(v); });
    out.max_second_diff = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < out.S.size(); ++i) {
      const double d = out.S[i + 1] - 2.0 * out.S[i] + out.S[i - 1];
      out.second_diff.push_back(d);
      out.max_second_diff = std::max(out.max_second_diff, d);
    }
    return out;
  }
  throw Error(ErrorKind::PerturbationTooLarge, "no admissible flow window after 30 halvings");
}

ShapeDerivatives shape_derivatives(const WeightedBody& wb, const BoundaryField& f, const Psi& psi) {
  const Potential& u = wb.potential();
  const int M = wb.M();
  const auto fs = f.sample(M);
  double phi_int = 0.0;
  double phi_sq = 0.0;
  double grad_term = 0.0;
  if (!psi.is_zero()) {
    const auto& nodes = wb.interior();
    std::vector<double> a(nodes.size()), b(nodes.size()), c(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto pg = psi.at_gradient(u, nodes[i].x);
      a[i] = pg.value * nodes[i].weight;
      b[i] = pg.value * pg.value * nodes[i].weight;
      c[i] = pg.gradient.dot(nodes[i].u.hessian * pg.gradient) * nodes[i].weight;
    }
    phi_int = pairwise_sum(a);
    phi_sq = pairwise_sum(b);
    grad_term = pairwise_sum(c);
  }
  std::vector<double> fphi(M), hf2(M), df2(M);
  for (int j = 0; j < M; ++j) {
    const double phi = psi.is_zero() ? 0.0 : psi.at_gradient(u, wb.node(j).x).value;
    fphi[j] = fs.value[j] * phi;
    hf2[j] = wb.mean_curvature()[j] * fs.value[j] * fs.value[j];
    df2[j] = fs.d1[j] * fs.d1[j] * wb.arc_weights()[j];
  }
  ShapeDerivatives d;
  d.I0 = wb.mu_K();
  d.I1 = phi_int + wb.boundary_integral(fs.value);
  d.I2 = phi_sq - grad_term + 2.0 * wb.boundary_integral(fphi) + wb.boundary_integral(hf2) -
         pairwise_sum(df2);
  d.S2 = d.I2 / d.I0 - (d.I1 / d.I0) * (d.I1 / d.I0);
  return d;
}

FiniteDifferenceDerivatives fd_shape_derivatives(const SupportFunction& h, const Potential& u,
                                                 const BoundaryField& f, const Psi& psi, double h1,
                                                 double h2, QuadratureConfig cfg) {
  const double i0 = flow_I(h, u, f, psi, 0.0, cfg);
  FiniteDifferenceDerivatives d;
  d.I1 = (flow_I(h, u, f, psi, h1, cfg) - flow_I(h, u, f, psi, -h1, cfg)) / (2.0 * h1);
  d.I2 = (flow_I(h, u, f, psi, h2, cfg) - 2.0 * i0 + flow_I(h, u, f, psi, -h2, cfg)) / (h2 * h2);
  return d;
}

MeanFormFromFlow mean_form_from_flow(const WeightedBody& wb, const BoundaryField& f, const Psi& psi) {
  const ShapeDerivatives d = shape_derivatives(wb, f, psi);
  MeanFormFromFlow out;
  out.flow_value = d.I0 * d.S2;
  const InteriorField phi = psi.composed_with_gradient(wb.potential());
  const double P = form_P(wb, f, f);
  const double BL = wb.potential().is_lebesgue() && psi.is_zero() ? 0.0 : form_BL(wb, phi, phi);
  const double I = form_I(wb, f, phi);
  out.forms_value = -(P + BL - 2.0 * I);
  out.difference = out.flow_value - out.forms_value;
  out.scale = std::max({std::abs(P), std::abs(BL), 1.0});
  return out;
}

}  // namespace bpl
