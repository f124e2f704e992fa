// SPDX-License-Identifier: Apache-2.0
#include "bpl/pde.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "bpl/errors.hpp"
#include "bpl/forms.hpp"

namespace bpl {

Basis::Basis(int N, bool even_only) : N_(N), even_only_(even_only) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "basis order must be >= 1");
  freq_.push_back(0);
  sine_.push_back(false);
  for (int k = even_only ? 2 : 1; k <= N; k += even_only ? 2 : 1) {
    freq_.push_back(k);
    sine_.push_back(false);
    freq_.push_back(k);
    sine_.push_back(true);
  }
}

Eigen::MatrixXd Basis::values(int M) const {
  Eigen::MatrixXd E(M, dim());
  for (int i = 0; i < M; ++i) {
    const double th = grid_angle(i, M);
    for (int j = 0; j < dim(); ++j) {
      const double a = freq_[j] * th;
      E(i, j) = sine_[j] ? std::sin(a) : std::cos(a);
    }
  }
  return E;
}

Eigen::MatrixXd Basis::derivatives(int M) const {
  Eigen::MatrixXd D(M, dim());
  for (int i = 0; i < M; ++i) {
    const double th = grid_angle(i, M);
    for (int j = 0; j < dim(); ++j) {
      const double k = freq_[j];
      D(i, j) = sine_[j] ? k * std::cos(k * th) : -k * std::sin(k * th);
    }
  }
  return D;
}

TrigSeries Basis::to_series(const Eigen::VectorXd& c) const {
  std::vector<double> cc(N_ + 1, 0.0);
  std::vector<double> ss(N_ + 1, 0.0);
  for (int j = 0; j < dim(); ++j) (sine_[j] ? ss : cc)[freq_[j]] += c(j);
  return TrigSeries(std::move(cc), std::move(ss));
}

Eigen::VectorXd Basis::project(const TrigSeries& s) const {
  Eigen::VectorXd c(dim());
  for (int j = 0; j < dim(); ++j) c(j) = sine_[j] ? s.sin_coeff(freq_[j]) : s.cos_coeff(freq_[j]);
  return c;
}

PoincareSystem assemble(const WeightedBody& wb, int N, bool even_only) {
  if (N < 4) throw Error(ErrorKind::InvalidArgument, "basis order N must be >= 4");
  if (2 * N >= wb.M()) {
    throw Error(ErrorKind::InvalidArgument, "basis order N must stay below M/2");
  }
  PoincareSystem sys;
  sys.basis = Basis(N, even_only);
  const int M = wb.M();
  const Eigen::MatrixXd E = sys.basis.values(M);
  const Eigen::MatrixXd D = sys.basis.derivatives(M);
  Eigen::VectorXd wb_vec(M), wa(M), wh(M), wg(M);
  for (int i = 0; i < M; ++i) {
    wb_vec(i) = wb.boundary_weights()[i];
    wa(i) = wb.arc_weights()[i];
    wh(i) = wb.mean_curvature()[i] * wb.boundary_weights()[i];
    wg(i) = wb.arc_weights()[i] / wb.node(i).radius;
  }
  sys.A = D.transpose() * wa.asDiagonal() * D;
  sys.B = E.transpose() * wh.asDiagonal() * E;
  sys.m = E.transpose() * wb_vec;
  sys.mass = E.transpose() * wb_vec.asDiagonal() * E;
  sys.h1_gradient = D.transpose() * wg.asDiagonal() * D;
  sys.muK = wb.mu_K();
  sys.G = sys.A - sys.B + sys.m * sys.m.transpose() / sys.muK;
  sys.G = 0.5 * (sys.G + sys.G.transpose());
  if (wb.potential().is_lebesgue()) {
    // Translations ⟨x₀,ν⟩ span ker P and m ⊥ ker P, so pinning the first
    // harmonics selects one solution without changing ∫ρ̄.
    const double pin = sys.G.trace() / sys.basis.dim();
    for (int j = 0; j < sys.basis.dim(); ++j) {
      if (sys.basis.frequency(j) == 1) sys.G(j, j) += pin;
    }
  }
  sys.chol.compute(sys.G);
  if (sys.chol.info() != Eigen::Success) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.G, Eigen::EigenvaluesOnly);
    std::ostringstream msg;
    msg << "Gram matrix of the P form is not positive definite (lambda_min = "
        << es.eigenvalues()(0) << ")";
    throw Error(ErrorKind::CoercivityFailure, msg.str());
  }
  return sys;
}

RhoBarSolution solve_rho_bar(const PoincareSystem& sys) {
  if (sys.chol.info() != Eigen::Success) {
    throw Error(ErrorKind::CoercivityFailure, "Gram matrix has no Cholesky factor");
  }
  RhoBarSolution out;
  out.coeffs = sys.chol.solve(sys.m);
  out.rho = BoundaryField(sys.basis.to_series(out.coeffs));
  out.energy = sys.m.dot(out.coeffs);
  out.p = sys.muK / out.energy;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.G, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  out.condition = ev(ev.size() - 1) / ev(0);
  return out;
}

double concavity_power(const WeightedBody& wb, int N, bool even_only) {
  return solve_rho_bar(assemble(wb, N, even_only)).p;
}

std::vector<double> apply_L_nodal(const WeightedBody& wb, const BoundaryField& rho) {
  const int M = wb.M();
  const auto s = rho.sample(M);
  const double mean = wb.boundary_integral(s.value) / wb.mu_K();
  std::vector<double> out(M);
  for (int j = 0; j < M; ++j) {
    const BoundaryPoint& p = wb.node(j);
    out[j] = -s.d2[j] / p.radius + wb.boundary_gradients()[j].dot(p.tangent) * s.d1[j] -
             wb.mean_curvature()[j] * s.value[j] + mean;
  }
  return out;
}

BoundaryField apply_L(const WeightedBody& wb, const BoundaryField& rho) {
  return BoundaryField(TrigSeries::from_samples(apply_L_nodal(wb, rho)));
}

SupportIdentityReport support_identity_check(const WeightedBody& wb) {
  const BoundaryField h(wb.body().series());
  const std::vector<double> Lh = apply_L_nodal(wb, h);
  const double g_int = wb.interior_integral(
      [](const WeightedBody::InteriorNode& n) { return n.u.gradient.dot(n.x); });
  const double g_mean = g_int / wb.mu_K();
  SupportIdentityReport r;
  double pscale = 1.0;
  for (int j = 0; j < wb.M(); ++j) {
    const double g = wb.boundary_gradients()[j].dot(wb.node(j).x);
    const double rhs = 1.0 + g - g_mean;
    r.pointwise_residual = std::max(r.pointwise_residual, std::abs(Lh[j] - rhs));
    pscale = std::max(pscale, std::abs(rhs));
  }
  const double bh = wb.boundary_integral(wb.body().values());
  r.integral_residual = std::abs(bh - 2.0 * wb.mu_K() + g_int);
  r.scale = std::max({pscale, std::abs(bh), wb.mu_K()});
  r.pass = r.pointwise_residual <= 1e-8 * r.scale && r.integral_residual <= 1e-8 * r.scale;
  return r;
}

double rayleigh(const WeightedBody& wb, const BoundaryField& rho) {
  const double mean = wb.boundary_integral(rho);
  const double P = form_P(wb, rho, rho);
  if (std::abs(mean) <= 1e-14 * std::max(1.0, std::sqrt(std::abs(P) * wb.mu_K()))) {
    throw Error(ErrorKind::ZeroMean, "J(rho) needs a nonzero boundary mean");
  }
  return wb.mu_K() * P / (mean * mean);
}

}  // namespace bpl
