// SPDX-License-Identifier: Apache-2.0
// Command-line front end: runs one experiment per invocation and writes
// report.json plus CSV tables (and SVG plots with --plot) to --out.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "bpl/analysis.hpp"
#include "bpl/config.hpp"
#include "bpl/errors.hpp"
#include "bpl/flow.hpp"
#include "bpl/forms.hpp"
#include "bpl/random_fields.hpp"
#include "bpl/report.hpp"
#include "bpl/suite.hpp"

namespace fs = std::filesystem;
using namespace bpl;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Flags {
  std::string config;
  std::string out = "out";
  std::optional<std::uint64_t> seed;
  bool plot = false;
  std::optional<int> quad_m;
  std::optional<int> modes;
};

struct Context {
  std::string command;
  Config cfg;
  fs::path out;
  std::uint64_t seed = 42;
  bool plot = false;
  QuadratureConfig quad;
  int N = kDefaultModes;
  std::optional<SupportFunction> body;
  std::optional<Potential> u;
  Json inputs = Json::object();
};

struct Outcome {
  bool pass = false;
  Json report = Json::object();
};

// Build-time validation failures of user input are configuration errors.
template <class F>
auto as_config_error(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigError) throw;
    throw Error(ErrorKind::ConfigError, what + ": " + e.what());
  }
}

Context make_context(const std::string& command, const Flags& flags) {
  Context c;
  c.command = command;
  if (!flags.config.empty()) c.cfg = Config::load(flags.config);
  if (flags.quad_m) c.cfg.set("quad.M", std::to_string(*flags.quad_m));
  if (flags.modes) c.cfg.set("basis.N", std::to_string(*flags.modes));
  c.seed = flags.seed ? *flags.seed : c.cfg.seed(42);
  c.out = flags.out;
  c.plot = flags.plot;
  c.quad = quadrature_from_config(c.cfg);
  c.N = c.cfg.integer("basis.N", kDefaultModes);
  if (c.N < 4 || 2 * c.N >= c.quad.M) {
    throw Error(ErrorKind::ConfigError, "basis.N must satisfy 4 <= N < quad.M/2");
  }
  c.body = as_config_error("body", [&] { return make_body(body_from_config(c.cfg), c.quad.M); });
  c.u = as_config_error("potential", [&] { return make_potential(potential_from_config(c.cfg)); });
  Json entries = Json::object();
  for (const auto& [k, v] : c.cfg.entries()) entries[k] = v;
  c.inputs = {{"command", command},
              {"config", entries},
              {"seed", c.seed},
              {"quad", {{"M", c.quad.M}, {"Q", c.quad.Q}}},
              {"basis_N", c.N},
              {"potential", c.u->name()},
              {"centering_shift", num_array({c.body->centering_shift().x(), c.body->centering_shift().y()})}};
  return c;
}

std::string seed_note(const Context& c) { return "seed = " + std::to_string(c.seed); }

Outcome cmd_forms_check(const Context& c) {
  const WeightedBody wb(*c.body, *c.u, c.quad);
  const int pairs = c.cfg.integer("forms.pairs", 200);
  const int order = c.cfg.integer("forms.order", 6);
  std::mt19937_64 rng(c.seed);
  std::vector<double> idx, P, BL, I, sm, sx;
  int violations = 0;
  bool fallback = false;
  double min_mean = std::numeric_limits<double>::infinity();
  double min_mult = std::numeric_limits<double>::infinity();
  for (int i = 0; i < pairs; ++i) {
    const auto rep = evaluate_forms(wb, random_boundary_field(rng, order), random_interior_field(rng));
    idx.push_back(i);
    P.push_back(rep.P);
    BL.push_back(rep.BL);
    I.push_back(rep.I);
    sm.push_back(rep.slack_mean);
    sx.push_back(rep.slack_mult);
    violations += !(rep.pass_mean && rep.pass_mult);
    fallback = fallback || rep.gradient_fallback;
    min_mean = std::min(min_mean, rep.slack_mean / rep.scale);
    min_mult = std::min(min_mult, rep.slack_mult / (rep.scale * rep.scale));
  }
  write_csv(c.out / "forms_pairs.csv", {"index", "P", "BL", "I", "slack_mean", "slack_mult"},
            {idx, P, BL, I, sm, sx}, seed_note(c));
  const FieldPair w = equality_witness(*c.body, *c.u, 1.0, Vec2::Zero(), 0.0);
  const auto wrep = evaluate_forms(wb, w.rho, w.phi);
  Outcome o;
  o.pass = violations == 0;
  o.report = {{"pairs", pairs},
              {"violations", violations},
              {"min_scaled_slack_mean", num(min_mean)},
              {"min_scaled_slack_mult", num(min_mult)},
              {"gradient_fallback", fallback},
              {"witness_alpha1",
               {{"P", num(wrep.P)}, {"BL", num(wrep.BL)}, {"I", num(wrep.I)},
                {"slack_mean", num(wrep.slack_mean)}, {"asserted", false}}}};
  return o;
}

Outcome cmd_solve(const Context& c) {
  const WeightedBody wb(*c.body, *c.u, c.quad);
  const PoincareSystem sys = assemble(wb, c.N);
  const RhoBarSolution sol = solve_rho_bar(sys);
  const auto L = apply_L_nodal(wb, sol.rho);
  double resid = 0.0;
  for (double v : L) resid = std::max(resid, std::abs(v - 1.0));
  const auto rho = sol.rho.sample(c.quad.M).value;
  std::vector<double> theta(c.quad.M);
  for (int j = 0; j < c.quad.M; ++j) theta[j] = grid_angle(j, c.quad.M);
  write_csv(c.out / "rho_bar.csv", {"theta", "rho_bar", "L_rho_bar"}, {theta, rho, L}, seed_note(c));
  Outcome o;
  o.report = {{"p", num(sol.p)},
              {"energy", num(sol.energy)},
              {"mu_K", num(wb.mu_K())},
              {"mu_boundary", num(wb.mu_boundary())},
              {"strong_residual", num(resid)},
              {"condition_number", num(sol.condition)},
              {"rho_bar_coefficients", num_array(std::vector<double>(sol.coeffs.data(), sol.coeffs.data() + sol.coeffs.size()))}};
  bool pass = resid <= 1e-7;
  if (!c.u->is_lebesgue()) {
    const auto si = support_identity_check(wb);
    o.report["support_identity"] = {{"pointwise_residual", num(si.pointwise_residual)},
                                    {"integral_residual", num(si.integral_residual)},
                                    {"pass", si.pass}};
    pass = pass && si.pass;
  } else {
    const BoundaryField h(wb.body().series());
    double r1 = 0.0;
    for (double v : apply_L_nodal(wb, h)) r1 = std::max(r1, std::abs(v - 1.0));
    o.report["L_of_h_minus_one"] = num(r1);
    pass = pass && r1 <= 1e-9;
  }
  if (wb.body().is_even() && c.u->is_even()) {
    const double pe = concavity_power(wb, c.N, true);
    o.report["p_even_basis"] = num(pe);
    o.report["max_odd_coefficient"] = num(sol.rho.series().max_abs_odd_coeff());
  }
  o.pass = pass;
  return o;
}

Outcome cmd_flow(const Context& c) {
  const BoundaryField f = flow_direction_from_config(c.cfg, *c.body);
  const Psi psi = as_config_error("flow.psi", [&] { return psi_from_config(c.cfg, *c.u); });
  FlowConfig fc{f, psi, c.cfg.real("flow.epsilon", 0.1), c.cfg.integer("flow.points", 21)};
  const MarginalTable tab = marginal_S(*c.body, *c.u, fc, c.quad);
  write_csv(c.out / "flow.csv", {"t", "I", "S"}, {tab.t, tab.I, tab.S}, seed_note(c));
  const WeightedBody wb(*c.body, *c.u, c.quad);
  const ShapeDerivatives sd = shape_derivatives(wb, f, psi);
  const auto fd = fd_shape_derivatives(*c.body, *c.u, f, psi, 1e-4, 1e-3, c.quad);
  const double e1 = std::abs(sd.I1 - fd.I1) / std::max(std::abs(fd.I1), 1e-300);
  const double e2 = std::abs(sd.I2 - fd.I2) / std::max(std::abs(fd.I2), 1e-300);
  Outcome o;
  o.report = {{"psi", psi.name()},
              {"epsilon", num(tab.epsilon)},
              {"halvings", tab.halvings},
              {"max_second_difference", num(tab.max_second_diff)},
              {"I0", num(sd.I0)},
              {"I1", num(sd.I1)},
              {"I1_fd", num(fd.I1)},
              {"I2", num(sd.I2)},
              {"I2_fd", num(fd.I2)},
              {"S2", num(sd.S2)}};
  bool pass = tab.concave() && e1 <= 1e-6 && e2 <= 1e-4;
  if (!(c.u->is_lebesgue() && !psi.is_zero())) {
    const MeanFormFromFlow mf = mean_form_from_flow(wb, f, psi);
    o.report["cross_module"] = {{"flow_value", num(mf.flow_value)},
                                {"forms_value", num(mf.forms_value)},
                                {"difference", num(mf.difference)}};
    pass = pass && std::abs(mf.difference) <= 1e-7 * mf.scale;
  }
  if (c.plot) {
    const std::vector<double> chord = {tab.S.front(), tab.S.back()};
    write_svg(c.out / "flow.svg", "S(t) and its chord (" + seed_note(c) + ")",
              {{"S(t)", tab.t, tab.S, false}, {"chord", {tab.t.front(), tab.t.back()}, chord, true}});
  }
  o.pass = pass;
  return o;
}

Outcome cmd_spectral(const Context& c) {
  const WeightedBody wb(*c.body, *c.u, c.quad);
  const PoincareSystem sys = assemble(wb, c.N);
  const Lambda1Result l1 = lambda1(sys);
  const double C = coercivity_constant(sys);
  const double C4 = coercivity_constant(assemble(wb, c.N + 4));
  std::mt19937_64 rng(c.seed);
  const auto interp = interpolation_constant(wb, c.cfg.integer("spectral.samples", 1000), rng);
  const auto deltas = c.cfg.list("spectral.deltas", {1e-3, 1e-2, 1e-1, 1.0});
  const StabilityScaling st = stability_scaling(wb, sys, random_boundary_field(rng), deltas);
  Outcome o;
  o.report = {{"lambda1", num(l1.value)},
              {"lambda1_infinite", l1.infinite},
              {"coercivity_C", num(C)},
              {"coercivity_C_N_plus_4", num(C4)},
              {"min_radius_of_curvature", num(1.0 / wb.body().max_curvature())},
              {"interpolation_constant", num(interp.max_ratio)},
              {"interpolation_half_sample", num(interp.max_ratio_half)},
              {"stability_constant", num(st.constant)},
              {"stability_slope", num(st.slope)},
              {"stability_worst_ratio", num(st.worst_ratio)}};
  o.pass = (l1.infinite || l1.value > 1.0) && C > 0.0 && std::isfinite(interp.max_ratio) &&
           interp.growth() < 0.2 && std::abs(st.slope - 0.5) <= 1e-12 && st.worst_ratio <= 1.0 + 1e-9;
  return o;
}

Outcome cmd_bm(const Context& c) {
  const SupportFunction L =
      as_config_error("body2", [&] { return make_body(body_from_config(c.cfg, "body2"), c.quad.M); });
  const double p = c.cfg.real("bm.p", 0.5);
  const BMReport bm = bm_check(*c.body, L, *c.u, p, c.cfg.integer("bm.nodes", 21), c.quad,
                               c.cfg.boolean("bm.probe", false), c.N);
  write_csv(c.out / "bm.csv", {"t", "mu", "slack"}, {bm.t, bm.mu, bm.slack}, seed_note(c));
  const ReformulationReport rf = reformulation_check(WeightedBody(*c.body, *c.u, c.quad), c.N);
  Outcome o;
  o.report = {{"p", num(p)},
              {"min_slack", num(bm.min_slack)},
              {"local_p_min", num(bm.local_p_min)},
              {"bm_pass", bm.pass},
              {"reformulation",
               {{"p", num(rf.p)}, {"interaction", num(rf.interaction)},
                {"closed_form", num(rf.closed_form)}, {"identity_residual", num(rf.identity_residual)},
                {"sign_agrees", rf.sign_agrees}, {"symmetric_setting", rf.symmetric_setting}}}};
  o.pass = bm.pass && rf.identity_residual <= 1e-8 && rf.sign_agrees;
  if (c.plot) {
    write_svg(c.out / "bm.svg", "BM slack along the segment (" + seed_note(c) + ")",
              {{"slack", bm.t, bm.slack, false}});
  }
  return o;
}

Outcome cmd_bounds(const Context& c) {
  const auto rep = pinching_bounds(WeightedBody(*c.body, *c.u, c.quad), c.N);
  Outcome o;
  o.report = {{"k1", num(rep.k1)},
              {"k2", num(rep.k2)},
              {"moment", num(rep.moment)},
              {"p", num(rep.p)},
              {"radial_bound", rep.radial_bound},
              {"general_bound", rep.general_bound},
              {"power_bound", rep.power_bound},
              {"pinching_on_nodes", rep.pinching_on_nodes},
              {"symmetric_setting", rep.symmetric_setting}};
  o.pass = rep.pass();
  return o;
}

Outcome cmd_scan(const Context& c) {
  const auto radii = c.cfg.list("scan.radii", {0.25, 0.5, 1.0, 1.5, 2.0, 3.0});
  const bool gaussian = c.u->kind() == PotentialKind::Gaussian && c.u->is_even() && c.u->offset() == 0.0;
  std::vector<double> ps, closed, moments;
  bool pass = true;
  for (double R : radii) {
    const WeightedBody wb(as_config_error("scan.radii", [&] { return make_disk(R, c.quad.M); }), *c.u, c.quad);
    const double p = concavity_power(wb, c.N);
    ps.push_back(p);
    const double pc = gaussian ? 1.0 - (1.0 / R - R) * (std::exp(0.5 * R * R) - 1.0) / R : NAN;
    closed.push_back(pc);
    if (gaussian) pass = pass && std::abs(p - pc) <= 1e-7 && p >= 0.5;
    if (c.u->pinching()) {
      const auto b = pinching_bounds(wb, c.N);
      moments.push_back(b.moment);
      pass = pass && b.general_bound;
    } else {
      moments.push_back(NAN);
    }
  }
  write_csv(c.out / "scan.csv", {"R", "p", "p_closed_form", "moment"}, {radii, ps, closed, moments},
            seed_note(c));
  if (c.plot) {
    std::vector<SvgSeries> s = {{"p(R)", radii, ps, false}};
    if (gaussian) s.push_back({"closed form", radii, closed, true});
    write_svg(c.out / "scan.svg", "concavity power vs disk radius (" + seed_note(c) + ")", s);
  }
  Outcome o;
  o.pass = pass;
  o.report = {{"radii", num_array(radii)}, {"p", num_array(ps)}, {"p_closed_form", num_array(closed)},
              {"moment", num_array(moments)}};
  return o;
}

Outcome cmd_all(const Context& c) {
  SuiteOptions opt;
  opt.quad = c.quad;
  opt.N = c.N;
  opt.seed = c.seed;
  opt.pairs = c.cfg.integer("forms.pairs", 200);
  Outcome o;
  o.pass = true;
  Json list = Json::array();
  for (int i = 1; i <= kCriterionCount; ++i) {
    const CriterionResult r = run_criterion(i, opt);
    std::printf("%-5s %s  %s: %s\n", r.id.c_str(), r.pass ? "PASS" : "FAIL", r.title.c_str(), r.detail.c_str());
    std::fflush(stdout);
    o.pass = o.pass && r.pass;
    list.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"data", r.data}});
  }
  o.report = {{"criteria", list}};
  return o;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ConfigError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotStrictlyConvex:
    case ErrorKind::OriginOutside:
    case ErrorKind::NotConvexPotential:
    case ErrorKind::LebesgueModeRestriction:
    case ErrorKind::PinchingUndeclared:
      return kExitConfig;
    default:
      return kExitNumerical;
  }
}

void write_failure(const fs::path& out, const std::string& command, const std::string& kind,
                   const std::string& message) {
  try {
    write_json(out / "failure.json", {{"command", command}, {"error", kind}, {"message", message}});
  } catch (...) {
    // The failure record is best effort; stderr already carries the message.
  }
}

int run(const std::string& command, const Flags& flags) {
  const fs::path out = flags.out;
  try {
    const Context c = make_context(command, flags);
    Outcome o;
    if (command == "forms-check") o = cmd_forms_check(c);
    else if (command == "solve") o = cmd_solve(c);
    else if (command == "flow") o = cmd_flow(c);
    else if (command == "spectral") o = cmd_spectral(c);
    else if (command == "bm") o = cmd_bm(c);
    else if (command == "bounds") o = cmd_bounds(c);
    else if (command == "scan") o = cmd_scan(c);
    else o = cmd_all(c);
    Json report = c.inputs;
    report["pass"] = o.pass;
    report["results"] = o.report;
    write_json(c.out / "report.json", report);
    std::cout << command << ": " << (o.pass ? "pass" : "FAIL") << " (report in " << (c.out / "report.json").string() << ")\n";
    if (!o.pass) write_failure(out, command, "AssertionFailure", "one or more checks failed; see report.json");
    return o.pass ? kExitPass : kExitAssertion;
  } catch (const Error& e) {
    std::cerr << command << ": " << e.what() << "\n";
    write_failure(out, command, std::string(to_string(e.kind())), e.what());
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << command << ": " << e.what() << "\n";
    write_failure(out, command, "Internal", e.what());
    return kExitNumerical;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary Poincare laboratory: forms, concavity power, flows, spectral constants"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  app.add_option("--config", flags.config, "flat key = value config file");
  app.add_option("--out", flags.out, "output directory")->capture_default_str();
  app.add_option("--seed", flags.seed, "random seed (overrides config)");
  app.add_flag("--plot", flags.plot, "also write SVG plots");
  app.add_option("--quad-m", flags.quad_m, "boundary quadrature nodes (overrides quad.M)");
  app.add_option("--modes", flags.modes, "basis order N (overrides basis.N)");
  std::string chosen;
  for (const char* name : {"forms-check", "solve", "flow", "spectral", "bm", "bounds", "scan", "all"}) {
    app.add_subcommand(name)->callback([&chosen, name] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }
  return run(chosen, flags);
}
