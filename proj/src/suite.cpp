// SPDX-License-Identifier: Apache-2.0
#include "bpl/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "bpl/analysis.hpp"
#include "bpl/errors.hpp"
#include "bpl/flow.hpp"
#include "bpl/forms.hpp"
#include "bpl/random_fields.hpp"

namespace bpl {
namespace {

double rel_diff(double a, double b, double floor = 1e-300) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

double gaussian_disk_power(double R) {
  return 1.0 - (1.0 / R - R) * (std::exp(0.5 * R * R) - 1.0) / R;
}

Potential quadratic_diag(double a, double b) { return Potential::quadratic(Vec2(a, b).asDiagonal()); }

// --- 1 -------------------------------------------------------------------
CriterionResult gaussian_unit_disk(const SuiteOptions& opt) {
  CriterionResult r{"AC1", "Gaussian unit disk: p, rho-bar, strong residual"};
  const WeightedBody wb(make_disk(1.0, opt.quad.M), Potential::gaussian(), opt.quad);
  const RhoBarSolution sol = solve_rho_bar(assemble(wb, opt.N));
  const double expected = std::exp(0.5) - 1.0;
  double rho_err = std::abs(sol.coeffs(0) - expected);
  for (int j = 1; j < sol.coeffs.size(); ++j) rho_err = std::max(rho_err, std::abs(sol.coeffs(j)));
  const auto L = apply_L_nodal(wb, sol.rho);
  double resid = 0.0;
  for (double v : L) resid = std::max(resid, std::abs(v - 1.0));
  const double p_err = std::abs(sol.p - 1.0);
  r.pass = p_err <= 1e-8 && rho_err <= 1e-8 && resid <= 1e-7;
  r.detail = "|p-1|=" + fmt(p_err) + " |rho-(e^0.5-1)|=" + fmt(rho_err) + " |L rho-1|=" + fmt(resid);
  r.data = {{"p", num(sol.p)}, {"rho_bar_constant", num(sol.coeffs(0))},
            {"rho_error", num(rho_err)}, {"strong_residual", num(resid)}};
  return r;
}

// --- 2 -------------------------------------------------------------------
CriterionResult gaussian_disk_scan(const SuiteOptions& opt) {
  CriterionResult r{"AC2", "Gaussian disk scan: p(R) against the closed form"};
  double worst = 0.0;
  double min_p = std::numeric_limits<double>::infinity();
  Json rows = Json::array();
  for (double R : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0}) {
    const WeightedBody wb(make_disk(R, opt.quad.M), Potential::gaussian(), opt.quad);
    const double p = concavity_power(wb, opt.N);
    const double closed = gaussian_disk_power(R);
    worst = std::max(worst, std::abs(p - closed));
    min_p = std::min(min_p, p);
    rows.push_back({{"R", num(R)}, {"p", num(p)}, {"closed_form", num(closed)}});
  }
  r.pass = worst <= 1e-7 && min_p >= 0.5;
  r.detail = "max|p-p(R)|=" + fmt(worst) + " min p=" + fmt(min_p);
  r.data = {{"rows", rows}, {"max_error", num(worst)}};
  return r;
}

// --- 3 -------------------------------------------------------------------
CriterionResult divergence_identity(const SuiteOptions& opt) {
  CriterionResult r{"AC3", "Divergence identity for int_dK h dmu"};
  auto pots = matrix_potentials();
  pots.push_back({"zero", Potential::zero()});
  double worst = 0.0;
  int count = 0;
  Json rows = Json::array();
  for (const auto& b : matrix_bodies(opt.quad.M)) {
    for (const auto& p : pots) {
      const WeightedBody wb(b.h, p.u, opt.quad);
      const auto s = support_identity_check(wb);
      const double bh = wb.boundary_integral(wb.body().values());
      const double rel = s.integral_residual / std::max(std::abs(bh), wb.mu_K());
      worst = std::max(worst, rel);
      ++count;
      rows.push_back({{"body", b.name}, {"potential", p.name}, {"relative_residual", num(rel)},
                      {"pointwise_residual", num(s.pointwise_residual)}});
    }
  }
  r.pass = count >= 9 && worst <= 1e-9;
  r.detail = std::to_string(count) + " pairs, max relative residual " + fmt(worst);
  r.data = {{"rows", rows}};
  return r;
}

// --- 4 -------------------------------------------------------------------
struct WitnessSetting {
  double alpha;
  Vec2 x0;
  double z;
};

CriterionResult inequality_suites(const SuiteOptions& opt) {
  CriterionResult r{"AC4", "Mean and multiplicative forms; equality witnesses"};
  std::mt19937_64 rng(opt.seed);
  double min_mean = std::numeric_limits<double>::infinity();
  double min_mult = std::numeric_limits<double>::infinity();
  int failures = 0;
  int total = 0;
  for (const auto& b : matrix_bodies(opt.quad.M)) {
    for (const auto& p : matrix_potentials()) {
      const WeightedBody wb(b.h, p.u, opt.quad);
      for (int i = 0; i < opt.pairs; ++i) {
        const auto rep = evaluate_forms(wb, random_boundary_field(rng), random_interior_field(rng));
        min_mean = std::min(min_mean, rep.slack_mean / rep.scale);
        min_mult = std::min(min_mult, rep.slack_mult / (rep.scale * rep.scale));
        failures += !(rep.pass_mean && rep.pass_mult);
        ++total;
      }
    }
  }
  const std::vector<WitnessSetting> settings = {
      {0.0, {0.0, 0.0}, 0.0}, {1.0, {0.0, 0.0}, 0.0}, {0.7, {0.1, 0.0}, 3.0},
      {0.5, {-0.2, 0.1}, -1.0}, {2.0, {0.05, 0.05}, 0.5}};
  const std::vector<std::pair<SupportFunction, Potential>> witness_cfgs = {
      {make_disk(1.0, opt.quad.M), Potential::gaussian()},
      {center(make_ellipse(2.0, 1.0, opt.quad.M)), quadratic_diag(1.0, 2.0)}};
  double worst_witness = 0.0;
  double worst_translation = 0.0;
  Json wrows = Json::array();
  for (const auto& [h, u] : witness_cfgs) {
    const WeightedBody wb(h, u, opt.quad);
    for (const auto& s : settings) {
      const FieldPair w = equality_witness(h, u, s.alpha, s.x0, s.z);
      const auto rep = evaluate_forms(wb, w.rho, w.phi);
      worst_witness = std::max(worst_witness, std::abs(rep.slack_mean) / rep.scale);
      const FieldPair tr = translation_pair(u, s.x0, s.z);
      const auto trep = evaluate_forms(wb, tr.rho, tr.phi);
      worst_translation = std::max(worst_translation, std::abs(trep.slack_mean) / trep.scale);
      wrows.push_back({{"alpha", num(s.alpha)},
                       {"x0", num_array({s.x0.x(), s.x0.y()})},
                       {"z", num(s.z)},
                       {"P", num(rep.P)},
                       {"BL", num(rep.BL)},
                       {"I", num(rep.I)},
                       {"slack_mean", num(rep.slack_mean)},
                       {"translation_slack_mean", num(trep.slack_mean)}});
    }
  }
  const bool random_ok = failures == 0;
  const bool witness_ok = worst_witness <= 1e-8;
  r.pass = random_ok && witness_ok;
  r.detail = std::to_string(total) + " random pairs, " + std::to_string(failures) +
             " violations (min scaled slack mean " + fmt(min_mean) + ", mult " + fmt(min_mult) +
             "); witness max |slack|/scale " + fmt(worst_witness) +
             "; translation family " + fmt(worst_translation);
  r.data = {{"random_pairs", total},
            {"violations", failures},
            {"min_scaled_slack_mean", num(min_mean)},
            {"min_scaled_slack_mult", num(min_mult)},
            {"witness_max_scaled_slack", num(worst_witness)},
            {"translation_max_scaled_slack", num(worst_translation)},
            {"witnesses", wrows}};
  return r;
}

// --- 5 -------------------------------------------------------------------
CriterionResult flow_checks(const SuiteOptions& opt) {
  CriterionResult r{"AC5", "Flow: concavity of S, shape derivatives, cross-module identity"};
  const BoundaryField f(TrigSeries({0.0, 0.0, 0.3}, {0.0, 0.0, 0.0, 0.1}));
  double worst_second = -std::numeric_limits<double>::infinity();
  double worst_d1 = 0.0;
  double worst_d2 = 0.0;
  double worst_cross = 0.0;
  int configs = 0;
  Json rows = Json::array();
  for (const auto& b : matrix_bodies(opt.quad.M)) {
    for (const auto& p : matrix_potentials()) {
      const std::vector<std::pair<std::string, Psi>> psis = {
          {"quadratic", Psi::quadratic(0.3 * Mat2::Identity(), Vec2(0.1, -0.05), 0.2)},
          {"half-conjugate", Psi::scaled_conjugate(p.u, 0.5)}};
      const WeightedBody wb(b.h, p.u, opt.quad);
      for (const auto& [pname, psi] : psis) {
        const MarginalTable tab = marginal_S(b.h, p.u, {f, psi, 0.1, 21}, opt.quad);
        const ShapeDerivatives sd = shape_derivatives(wb, f, psi);
        const auto fd = fd_shape_derivatives(b.h, p.u, f, psi, 1e-4, 1e-3, opt.quad);
        const MeanFormFromFlow mf = mean_form_from_flow(wb, f, psi);
        const double e1 = rel_diff(sd.I1, fd.I1);
        const double e2 = rel_diff(sd.I2, fd.I2);
        const double ec = std::abs(mf.difference) / mf.scale;
        worst_second = std::max(worst_second, tab.max_second_diff);
        worst_d1 = std::max(worst_d1, e1);
        worst_d2 = std::max(worst_d2, e2);
        worst_cross = std::max(worst_cross, ec);
        ++configs;
        rows.push_back({{"body", b.name}, {"potential", p.name}, {"psi", pname},
                        {"epsilon", num(tab.epsilon)}, {"max_second_diff", num(tab.max_second_diff)},
                        {"I1", num(sd.I1)}, {"I1_fd", num(fd.I1)}, {"I2", num(sd.I2)},
                        {"I2_fd", num(fd.I2)}, {"S2", num(sd.S2)}, {"cross_residual", num(ec)}});
      }
    }
  }
  // Homothety flow: ψ = α·u*, f = α·h on the Gaussian unit disk.
  double worst_homothety = 0.0;
  Json hrows = Json::array();
  const SupportFunction disk = make_disk(1.0, opt.quad.M);
  const Potential g = Potential::gaussian();
  const WeightedBody wd(disk, g, opt.quad);
  for (double alpha : {0.5, 1.0}) {
    const BoundaryField fh(disk.series() * alpha);
    const ShapeDerivatives sd = shape_derivatives(wd, fh, Psi::scaled_conjugate(g, alpha));
    const double closed = -1.0 - 0.25 * std::exp(-0.5) / std::pow(1.0 - std::exp(-0.5), 2);
    worst_homothety = std::max(worst_homothety, std::abs(sd.S2));
    hrows.push_back({{"alpha", num(alpha)}, {"S2", num(sd.S2)},
                     {"closed_form_S2", num(alpha * alpha * closed)}});
  }
  const bool ok_flow = worst_second <= 1e-7 && worst_d1 <= 1e-6 && worst_d2 <= 1e-4 &&
                       worst_cross <= 1e-7;
  r.pass = ok_flow && worst_homothety <= 1e-8;
  r.detail = std::to_string(configs) + " configs: max 2nd diff " + fmt(worst_second) + ", I' err " +
             fmt(worst_d1) + ", I'' err " + fmt(worst_d2) + ", cross " + fmt(worst_cross) +
             "; homothety |S''(0)| " + fmt(worst_homothety);
  r.data = {{"configs", rows}, {"homothety", hrows}};
  return r;
}

// --- 6 -------------------------------------------------------------------
CriterionResult spectral_constants(const SuiteOptions& opt) {
  CriterionResult r{"AC6", "Coercivity, lambda_1, stability scaling"};
  std::mt19937_64 rng(opt.seed + 6);
  bool chol_ok = true;
  bool lambda_ok = true;
  double worst_c_drift = 0.0;
  double worst_slope = 0.0;
  double worst_ratio = 0.0;
  Json rows = Json::array();
  auto bodies = matrix_bodies(opt.quad.M);
  bodies.push_back({"disk(0.5)", make_disk(0.5, opt.quad.M)});
  for (const auto& b : bodies) {
    for (const auto& p : matrix_potentials()) {
      const WeightedBody wb(b.h, p.u, opt.quad);
      Json row = {{"body", b.name}, {"potential", p.name}};
      try {
        const PoincareSystem sys = assemble(wb, opt.N);
        const PoincareSystem sys4 = assemble(wb, opt.N + 4);
        const Lambda1Result l1 = lambda1(sys);
        const double C = coercivity_constant(sys);
        const double C4 = coercivity_constant(sys4);
        const StabilityScaling st =
            stability_scaling(wb, sys, random_boundary_field(rng), {1e-3, 1e-2, 1e-1, 1.0});
        lambda_ok = lambda_ok && (l1.infinite || l1.value > 1.0);
        worst_c_drift = std::max(worst_c_drift, std::abs(C - C4));
        worst_slope = std::max(worst_slope, std::abs(st.slope - 0.5));
        worst_ratio = std::max(worst_ratio, st.worst_ratio);
        row.update({{"lambda1", num(l1.value)}, {"C", num(C)}, {"C_N_plus_4", num(C4)},
                    {"min_radius", num(1.0 / b.h.max_curvature())},
                    {"stability_constant", num(st.constant)}, {"slope", num(st.slope)}});
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CoercivityFailure) throw;
        chol_ok = false;
        row["error"] = e.what();
      }
      rows.push_back(row);
    }
  }
  r.pass = chol_ok && lambda_ok && worst_c_drift <= 1e-6 && worst_slope <= 1e-12 &&
           worst_ratio <= 1.0 + 1e-9;
  r.detail = std::string("cholesky ") + (chol_ok ? "ok" : "FAILED") + ", lambda1 " +
             (lambda_ok ? "ok" : "FAILED") + ", max |C(N)-C(N+4)| " + fmt(worst_c_drift) +
             ", max |slope-0.5| " + fmt(worst_slope) + ", max norm/bound " + fmt(worst_ratio);
  r.data = {{"rows", rows}};
  return r;
}

// --- 7 -------------------------------------------------------------------
CriterionResult symmetry(const SuiteOptions& opt) {
  CriterionResult r{"AC7", "Symmetric data: odd modes of rho-bar vanish"};
  double worst_odd = 0.0;
  double worst_dp = 0.0;
  for (const auto& b : symmetric_bodies(opt.quad.M)) {
    for (const auto& p : matrix_potentials()) {
      const WeightedBody wb(b.h, p.u, opt.quad);
      const RhoBarSolution full = solve_rho_bar(assemble(wb, opt.N));
      const double p_even = concavity_power(wb, opt.N, true);
      worst_odd = std::max(worst_odd, full.rho.series().max_abs_odd_coeff());
      worst_dp = std::max(worst_dp, std::abs(full.p - p_even));
    }
  }
  r.pass = worst_odd <= 1e-10 && worst_dp < 1e-9;
  r.detail = "max odd coefficient " + fmt(worst_odd) + ", max |p - p_even| " + fmt(worst_dp);
  r.data = {{"max_odd_coefficient", num(worst_odd)}, {"max_p_change", num(worst_dp)}};
  return r;
}

// --- 8 -------------------------------------------------------------------
CriterionResult reformulation(const SuiteOptions& opt) {
  CriterionResult r{"AC8", "Reformulation identity and biconditional"};
  std::vector<std::pair<std::string, WeightedBody>> cases;
  for (const auto& b : symmetric_bodies(opt.quad.M)) {
    for (const auto& p : matrix_potentials()) cases.emplace_back(b.name + "/" + p.name, WeightedBody(b.h, p.u, opt.quad));
  }
  for (double R : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0}) {
    cases.emplace_back("disk(" + std::to_string(R) + ")/gaussian",
                       WeightedBody(make_disk(R, opt.quad.M), Potential::gaussian(), opt.quad));
  }
  double worst = 0.0;
  bool signs = true;
  Json rows = Json::array();
  for (const auto& [name, wb] : cases) {
    const auto rep = reformulation_check(wb, opt.N);
    worst = std::max(worst, rep.identity_residual);
    signs = signs && rep.sign_agrees;
    rows.push_back({{"case", name}, {"p", num(rep.p)}, {"interaction", num(rep.interaction)},
                    {"identity_residual", num(rep.identity_residual)}});
  }
  r.pass = worst <= 1e-8 && signs;
  r.detail = std::to_string(cases.size()) + " cases, max identity residual " + fmt(worst) +
             ", signs " + (signs ? "agree" : "DISAGREE");
  r.data = {{"rows", rows}};
  return r;
}

// --- 9 -------------------------------------------------------------------
CriterionResult pinching(const SuiteOptions& opt) {
  CriterionResult r{"AC9", "Pinching bounds: moment, 1/p, power"};
  const std::vector<NamedPotential> pots = {{"gaussian", Potential::gaussian()},
                                            {"quadratic(1,4)", quadratic_diag(1.0, 4.0)},
                                            {"quadratic(1,2)", quadratic_diag(1.0, 2.0)}};
  auto bodies = symmetric_bodies(opt.quad.M);
  for (double R : {0.25, 0.5, 1.5, 2.0, 3.0}) {
    bodies.push_back({"disk(" + std::to_string(R) + ")", make_disk(R, opt.quad.M)});
  }
  bool ok = true;
  int count = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  Json rows = Json::array();
  for (const auto& b : bodies) {
    for (const auto& p : pots) {
      const auto rep = pinching_bounds(WeightedBody(b.h, p.u, opt.quad), opt.N);
      ok = ok && rep.pass();
      ++count;
      min_margin = std::min(min_margin, rep.p - 1.0 / (2.0 * (rep.k2 / rep.k1 + 1.0)));
      rows.push_back({{"body", b.name}, {"potential", p.name}, {"moment", num(rep.moment)},
                      {"p", num(rep.p)}, {"radial", rep.radial_bound},
                      {"general", rep.general_bound}, {"power", rep.power_bound},
                      {"pinching_on_nodes", rep.pinching_on_nodes}});
    }
  }
  r.pass = ok;
  r.detail = std::to_string(count) + " configs, min p - 1/(2(r+1)) = " + fmt(min_margin) +
             " (pinching verified on nodes)";
  r.data = {{"rows", rows}};
  return r;
}

// --- 10 ------------------------------------------------------------------
CriterionResult brunn_minkowski(const SuiteOptions& opt) {
  CriterionResult r{"AC10", "Direct BM segments at p = 1/2"};
  const int M = opt.quad.M;
  const std::vector<std::pair<SupportFunction, SupportFunction>> pairs = {
      {make_disk(0.5, M), make_disk(1.5, M)},
      {make_ellipse(2.0, 1.0, M), make_ellipse(1.0, 2.0, M)},
      {make_ellipse(2.0, 1.0, M), make_disk(1.0, M)},
      {symmetric_bodies(M)[2].h, make_ellipse(1.5, 1.0, M)}};
  double min_slack = std::numeric_limits<double>::infinity();
  Json rows = Json::array();
  for (const auto& [K, L] : pairs) {
    const BMReport rep = bm_check(K, L, Potential::gaussian(), 0.5, 21, opt.quad);
    min_slack = std::min(min_slack, rep.min_slack);
    rows.push_back({{"min_slack", num(rep.min_slack)}, {"slack", num_array(rep.slack)}});
  }
  r.pass = min_slack >= -1e-9;
  r.detail = std::to_string(pairs.size()) + " pairs x 21 nodes, min slack " + fmt(min_slack);
  r.data = {{"rows", rows}};
  return r;
}

// --- 11 ------------------------------------------------------------------
std::vector<std::pair<std::string, double>> gate_scalars(const QuadratureConfig& q, int N,
                                                         std::uint64_t seed) {
  std::vector<std::pair<std::string, double>> out;
  std::mt19937_64 rng(seed + 11);
  for (double R : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0}) {
    out.emplace_back("p(disk " + std::to_string(R) + ")",
                     concavity_power(WeightedBody(make_disk(R, q.M), Potential::gaussian(), q), N));
  }
  const BoundaryField f(TrigSeries({0.0, 0.0, 0.3}, {0.0, 0.0, 0.0, 0.1}));
  for (const auto& b : matrix_bodies(q.M)) {
    for (const auto& p : matrix_potentials()) {
      const std::string tag = b.name + "/" + p.name;
      const WeightedBody wb(b.h, p.u, q);
      const PoincareSystem sys = assemble(wb, N);
      const RhoBarSolution sol = solve_rho_bar(sys);
      out.emplace_back("muK " + tag, wb.mu_K());
      out.emplace_back("muB " + tag, wb.mu_boundary());
      out.emplace_back("p " + tag, sol.p);
      out.emplace_back("C " + tag, coercivity_constant(sys));
      const auto l1 = lambda1(sys);
      if (!l1.infinite) out.emplace_back("lambda1 " + tag, l1.value);
      const auto rep = evaluate_forms(wb, random_boundary_field(rng), random_interior_field(rng));
      out.emplace_back("P " + tag, rep.P);
      out.emplace_back("BL " + tag, rep.BL);
      out.emplace_back("I " + tag, rep.I);
      const auto sd = shape_derivatives(wb, f, Psi::quadratic(0.3 * Mat2::Identity(), Vec2(0.1, -0.05), 0.2));
      out.emplace_back("I1 " + tag, sd.I1);
      out.emplace_back("I2 " + tag, sd.I2);
    }
  }
  for (const auto& b : symmetric_bodies(q.M)) {
    for (const auto& p : matrix_potentials()) {
      const WeightedBody wb(b.h, p.u, q);
      out.emplace_back("interaction " + b.name + "/" + p.name, reformulation_check(wb, N).interaction);
      if (p.u.pinching()) out.emplace_back("moment " + b.name + "/" + p.name, pinching_bounds(wb, N).moment);
    }
  }
  return out;
}

CriterionResult quadrature_gate(const SuiteOptions& opt) {
  CriterionResult r{"AC11", "Quadrature gate: doubling M and Q"};
  const auto base = gate_scalars(opt.quad, opt.N, opt.seed);
  const auto fine = gate_scalars(opt.quad.doubled(), opt.N, opt.seed);
  double worst = 0.0;
  std::string worst_name;
  Json rows = Json::array();
  for (std::size_t i = 0; i < base.size(); ++i) {
    const double d = rel_diff(base[i].second, fine[i].second);
    if (d > worst) {
      worst = d;
      worst_name = base[i].first;
    }
    rows.push_back({{"name", base[i].first}, {"value", num(base[i].second)}, {"relative_change", num(d)}});
  }
  r.pass = worst < 1e-9;
  r.detail = std::to_string(base.size()) + " scalars, max relative change " + fmt(worst) + " (" +
             worst_name + ")";
  r.data = {{"rows", rows}};
  return r;
}

}  // namespace

std::vector<NamedBody> matrix_bodies(int M) {
  return {{"disk(1)", make_disk(1.0, M)},
          {"ellipse(2,1)", center(make_ellipse(2.0, 1.0, M))},
          {"fourier-asym", center(make_fourier({1.0, 0.0, 0.08, 0.03}, {0.0, 0.05, 0.02}, M))}};
}

std::vector<NamedBody> symmetric_bodies(int M) {
  return {{"disk(1)", make_disk(1.0, M)},
          {"ellipse(2,1)", center(make_ellipse(2.0, 1.0, M))},
          {"fourier-even", center(make_fourier({1.0, 0.0, 0.1, 0.0, 0.02}, {}, M))}};
}

std::vector<NamedPotential> matrix_potentials() {
  return {{"gaussian", Potential::gaussian()},
          {"quadratic(1,4)", quadratic_diag(1.0, 4.0)},
          {"even-quartic(0.1)", Potential::even_quartic(0.1)}};
}

CriterionResult run_criterion(int index, const SuiteOptions& opt) {
  using Fn = CriterionResult (*)(const SuiteOptions&);
  static const std::array<std::pair<Fn, double>, kCriterionCount> table = {{
      {gaussian_unit_disk, 1.0},
      {gaussian_disk_scan, 5.0},
      {divergence_identity, 5.0},
      {inequality_suites, 30.0},
      {flow_checks, 60.0},
      {spectral_constants, 10.0},
      {symmetry, 2.0},
      {reformulation, 10.0},
      {pinching, 10.0},
      {brunn_minkowski, 10.0},
      {quadrature_gate, 0.0},
  }};
  if (index < 1 || index > kCriterionCount) {
    throw Error(ErrorKind::InvalidArgument, "criterion index out of range");
  }
  const auto [fn, budget] = table[index - 1];
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r = fn(opt);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget > 0.0 && r.seconds >= budget) {
    r.pass = false;
    r.detail += " [runtime " + fmt(r.seconds) + " s exceeds " + fmt(budget) + " s]";
  }
  return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opt) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= kCriterionCount; ++i) out.push_back(run_criterion(i, opt));
  return out;
}

}  // namespace bpl
