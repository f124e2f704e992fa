// SPDX-License-Identifier: Apache-2.0
#include "bpl/analysis.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "bpl/errors.hpp"
#include "bpl/forms.hpp"
#include "bpl/random_fields.hpp"

namespace bpl {

Lambda1Result lambda1(const PoincareSystem& sys) {
  const int d = sys.basis.dim();
  const Eigen::MatrixXd E = sys.B - sys.m * sys.m.transpose() / sys.muK;
  const double e00 = E(0, 0);
  if (!(e00 < 0.0)) {
    throw Error(ErrorKind::CoercivityFailure, "constants carry non-negative energy");
  }
  const int n = d - 1;
  const Eigen::MatrixXd Enn = E.bottomRightCorner(n, n);
  const Eigen::VectorXd En0 = E.bottomLeftCorner(n, 1);
  Eigen::MatrixXd Es = Enn - En0 * En0.transpose() / e00;
  Es = 0.5 * (Es + Es.transpose());
  const Eigen::MatrixXd Ann = sys.A.bottomRightCorner(n, n);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(Es, Ann, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::CoercivityFailure, "stiffness matrix is singular off the constants");
  }
  Lambda1Result r;
  r.lambda_max = es.eigenvalues()(n - 1);
  r.infinite = r.lambda_max <= 1e-12;
  r.value = r.infinite ? std::numeric_limits<double>::infinity() : 1.0 / r.lambda_max;
  return r;
}

double coercivity_constant(const PoincareSystem& sys) {
  const Eigen::MatrixXd S = sys.mass + sys.h1_gradient;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.G, S, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::CoercivityFailure, "H1 Gram matrix is not positive definite");
  }
  return es.eigenvalues()(0);
}

double h1_norm_sq(const WeightedBody& wb, const BoundaryField& rho) {
  const auto s = rho.sample(wb.M());
  std::vector<double> v(wb.M());
  for (int j = 0; j < wb.M(); ++j) {
    const double dr = s.d1[j] / wb.node(j).radius;
    v[j] = s.value[j] * s.value[j] + dr * dr;
  }
  return wb.boundary_integral(v);
}

StabilityScaling stability_scaling(const WeightedBody& wb, const PoincareSystem& sys,
                                   const BoundaryField& rho0, const std::vector<double>& deltas) {
  if (deltas.size() < 2) throw Error(ErrorKind::InvalidArgument, "need >= 2 scales");
  const double C = coercivity_constant(sys);
  StabilityScaling out;
  out.constant = 1.0 / std::sqrt(C);
  std::vector<double> log_def, log_norm;
  for (double d : deltas) {
    const BoundaryField rho = d * rho0;
    const double deficit = form_P(wb, rho, rho);
    const double norm = std::sqrt(h1_norm_sq(wb, rho));
    log_def.push_back(std::log(deficit));
    log_norm.push_back(std::log(norm));
    out.worst_ratio = std::max(out.worst_ratio, norm / (std::sqrt(deficit) * out.constant));
  }
  out.slope = (log_norm.back() - log_norm.front()) / (log_def.back() - log_def.front());
  return out;
}

double interpolation_ratio(const WeightedBody& wb, const BoundaryField& rho) {
  const auto s = rho.sample(wb.M());
  std::vector<double> sq(wb.M());
  for (int j = 0; j < wb.M(); ++j) sq[j] = s.value[j] * s.value[j];
  const double l2 = wb.boundary_integral(sq);
  return l2 / (std::sqrt(form_P(wb, rho, rho)) * std::sqrt(h1_norm_sq(wb, rho)));
}

InterpolationResult interpolation_constant(const WeightedBody& wb, int sample_size,
                                           std::mt19937_64& rng, int order) {
  InterpolationResult out;
  for (int i = 0; i < sample_size; ++i) {
    const double r = interpolation_ratio(wb, random_boundary_field(rng, order));
    out.max_ratio = std::max(out.max_ratio, r);
    if (i < sample_size / 2) out.max_ratio_half = out.max_ratio;
  }
  return out;
}

BMReport bm_check(const SupportFunction& hK, const SupportFunction& hL, const Potential& u, double p,
                  int t_nodes, QuadratureConfig cfg, bool probe_local, int N) {
  if (!(p > 0.0)) throw Error(ErrorKind::InvalidArgument, "bm_check needs p > 0");
  if (t_nodes < 2) throw Error(ErrorKind::InvalidArgument, "bm_check needs >= 2 t-nodes");
  const auto density = [&u](const Vec2& x) { return std::exp(-u.value(x)); };
  const SupportFunction K = hK.with_grid(cfg.M);
  const SupportFunction L = hL.with_grid(cfg.M);
  const double muK = integrate_density(K, density, cfg);
  const double muL = integrate_density(L, density, cfg);
  BMReport r;
  r.p = p;
  r.min_slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < t_nodes; ++i) {
    const double t = static_cast<double>(i) / (t_nodes - 1);
    const SupportFunction Kt = minkowski_combine(K, L, t);
    const double mu = integrate_density(Kt, density, cfg);
    const double s = std::pow(mu, p) - (1.0 - t) * std::pow(muK, p) - t * std::pow(muL, p);
    r.t.push_back(t);
    r.mu.push_back(mu);
    r.slack.push_back(s);
    r.min_slack = std::min(r.min_slack, s);
    if (probe_local) {
      const double pt = concavity_power(WeightedBody(Kt, u, cfg), N);
      r.local_p_min = std::isnan(r.local_p_min) ? pt : std::min(r.local_p_min, pt);
    }
  }
  r.pass = r.min_slack >= -1e-9;
  return r;
}

double local_concavity_fd(const SupportFunction& h, const Potential& u, const BoundaryField& f,
                          double p, double step, QuadratureConfig cfg) {
  const auto density = [&u](const Vec2& x) { return std::exp(-u.value(x)); };
  const auto G = [&](double t) {
    const double mu = integrate_density(wulff_perturb(h.with_grid(cfg.M), f, t), density, cfg);
    return p == 0.0 ? std::log(mu) : std::pow(mu, p);
  };
  return (G(step) - 2.0 * G(0.0) + G(-step)) / (step * step);
}

ReformulationReport reformulation_check(const WeightedBody& wb, int N) {
  const RhoBarSolution sol = solve_rho_bar(assemble(wb, N));
  const Potential& u = wb.potential();
  const InteriorField g([u](const Vec2& x) { return u.gradient(x).dot(x); });
  const double g_int = wb.interior_integral(
      [](const WeightedBody::InteriorNode& n) { return n.u.gradient.dot(n.x); });
  ReformulationReport r;
  r.p = sol.p;
  r.identity_rhs = form_I(wb, sol.rho, g);
  r.interaction = r.identity_rhs + g_int;
  r.closed_form = wb.mu_K() * (2.0 - 1.0 / sol.p);
  const double int_h = wb.boundary_integral(wb.body().values());
  const double int_rho = wb.boundary_integral(sol.rho);
  r.identity_lhs = int_h - int_rho;
  r.identity_residual = std::abs(r.identity_lhs - r.identity_rhs) /
                        std::max({std::abs(int_h), std::abs(int_rho), 1e-300});
  const double dead = 1e-8;
  const bool in_dead_zone =
      std::abs(sol.p - 0.5) <= dead || std::abs(r.interaction) <= dead * wb.mu_K();
  r.sign_agrees = in_dead_zone || ((sol.p > 0.5) == (r.interaction > 0.0));
  r.symmetric_setting = wb.body().is_even() && u.is_even();
  return r;
}

PinchingBoundsReport pinching_bounds(const WeightedBody& wb, int N) {
  const Potential& u = wb.potential();
  if (!u.pinching()) {
    throw Error(ErrorKind::PinchingUndeclared, "potential " + u.name() + " declares no pinching");
  }
  PinchingBoundsReport r;
  r.k1 = u.pinching()->k1;
  r.k2 = u.pinching()->k2;
  r.moment = wb.interior_integral([](const WeightedBody::InteriorNode& n) {
               return n.u.gradient.dot(n.u.hessian.ldlt().solve(n.u.gradient));
             }) /
             wb.mu_K();
  r.p = concavity_power(wb, N);
  const double tol = 1e-12;
  r.radial_bound = r.moment <= 2.0 * r.k2 / r.k1 * (1.0 + tol);
  r.general_bound = 1.0 / r.p <= (2.0 + r.moment) * (1.0 + tol);
  r.power_bound = r.p >= 1.0 / (2.0 * (r.k2 / r.k1 + 1.0)) * (1.0 - tol);
  std::vector<Vec2> pts;
  pts.reserve(wb.interior().size() + wb.nodes().size());
  for (const auto& n : wb.interior()) pts.push_back(n.x);
  for (const auto& n : wb.nodes()) pts.push_back(n.x);
  r.pinching_on_nodes = check_pinching(u, pts).ok;
  r.symmetric_setting = wb.body().is_even() && u.is_even();
  return r;
}

}  // namespace bpl
