// SPDX-License-Identifier: Apache-2.0
#include "bpl/quad.hpp"

#include <cmath>
#include <memory>
#include <string>

#include <gsl/gsl_integration.h>

#include "bpl/errors.hpp"

namespace bpl {

void QuadratureConfig::validate() const {
  if (M < 64 || M % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "quad.M must be even and >= 64, got " + std::to_string(M));
  }
  if (Q < 16) {
    throw Error(ErrorKind::InvalidArgument, "quad.Q must be >= 16, got " + std::to_string(Q));
  }
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

GaussLegendreRule gauss_legendre_unit(int Q) {
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(static_cast<size_t>(Q)),
            &gsl_integration_glfixed_table_free);
  if (!table) throw Error(ErrorKind::InvalidArgument, "Gauss-Legendre table allocation failed");
  GaussLegendreRule rule;
  rule.nodes.resize(Q);
  rule.weights.resize(Q);
  for (int i = 0; i < Q; ++i) {
    gsl_integration_glfixed_point(0.0, 1.0, static_cast<size_t>(i), &rule.nodes[i],
                                  &rule.weights[i], table.get());
  }
  return rule;
}

WeightedBody::WeightedBody(const SupportFunction& h, const Potential& u, QuadratureConfig cfg)
    : h_(h.with_grid(cfg.M)), u_(u), cfg_(cfg) {
  cfg_.validate();
  if (!h_.contains_origin()) {
    throw Error(ErrorKind::OriginOutside, "quadrature needs the origin in the interior of K");
  }
  const int M = cfg_.M;
  const double dtheta = kTwoPi / M;
  nodes_.resize(M);
  wb_.resize(M);
  wa_.resize(M);
  grad_.resize(M);
  H_.resize(M);
  for (int j = 0; j < M; ++j) {
    nodes_[j] = h_.node(j);
    const auto e = u_.eval(nodes_[j].x);
    const double w = std::exp(-e.value) * dtheta;
    wa_[j] = w;
    wb_[j] = w * nodes_[j].radius;
    grad_[j] = e.gradient;
    H_[j] = 1.0 / nodes_[j].radius - e.gradient.dot(nodes_[j].normal);
  }
  const GaussLegendreRule gl = gauss_legendre_unit(cfg_.Q);
  interior_.reserve(static_cast<std::size_t>(M) * cfg_.Q);
  for (int j = 0; j < M; ++j) {
    const double jac = h_.values()[j] * nodes_[j].radius * dtheta;
    for (int q = 0; q < cfg_.Q; ++q) {
      const double s = gl.nodes[q];
      const Vec2 x = s * nodes_[j].x;
      const auto e = u_.eval(x);
      interior_.push_back({x, s * jac * gl.weights[q] * std::exp(-e.value), e});
    }
  }
  muB_ = pairwise_sum(wb_);
  muK_ = interior_integral([](const InteriorNode&) { return 1.0; });
}

double WeightedBody::boundary_integral(std::span<const double> values) const {
  if (static_cast<int>(values.size()) != cfg_.M) {
    throw Error(ErrorKind::InvalidArgument, "boundary values must live on the quadrature grid");
  }
  std::vector<double> terms(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) terms[j] = values[j] * wb_[j];
  return pairwise_sum(terms);
}

double WeightedBody::boundary_integral(const BoundaryField& g) const {
  return boundary_integral(g.sample(cfg_.M).value);
}

double WeightedBody::boundary_integral(const std::function<double(const BoundaryPoint&)>& g) const {
  std::vector<double> v(cfg_.M);
  for (int j = 0; j < cfg_.M; ++j) v[j] = g(nodes_[j]);
  return boundary_integral(v);
}

double WeightedBody::interior_integral(const InteriorField& g) const {
  return interior_integral([&g](const InteriorNode& n) { return g(n.x); });
}

double WeightedBody::interior_integral(const std::function<double(const InteriorNode&)>& g) const {
  std::vector<double> terms(interior_.size());
  for (std::size_t i = 0; i < interior_.size(); ++i) terms[i] = g(interior_[i]) * interior_[i].weight;
  return pairwise_sum(terms);
}

double boundary_integral(const SupportFunction& h, const Potential& u, const BoundaryField& g,
                         QuadratureConfig cfg) {
  return WeightedBody(h, u, cfg).boundary_integral(g);
}

double interior_integral(const SupportFunction& h, const Potential& u, const InteriorField& g,
                         QuadratureConfig cfg) {
  return WeightedBody(h, u, cfg).interior_integral(g);
}

double integrate_density(const SupportFunction& h0, const std::function<double(const Vec2&)>& density,
                         QuadratureConfig cfg) {
  cfg.validate();
  const SupportFunction h = h0.with_grid(cfg.M);
  if (!h.contains_origin()) {
    throw Error(ErrorKind::OriginOutside, "quadrature needs the origin in the interior of K");
  }
  const GaussLegendreRule gl = gauss_legendre_unit(cfg.Q);
  const double dtheta = kTwoPi / cfg.M;
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(cfg.M) * cfg.Q);
  for (int j = 0; j < cfg.M; ++j) {
    const BoundaryPoint p = h.node(j);
    const double jac = h.values()[j] * p.radius * dtheta;
    for (int q = 0; q < cfg.Q; ++q) {
      const double s = gl.nodes[q];
      terms.push_back(density(s * p.x) * s * jac * gl.weights[q]);
    }
  }
  return pairwise_sum(terms);
}

}  // namespace bpl
