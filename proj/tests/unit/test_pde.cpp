// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include <doctest.h>

#include "bpl/errors.hpp"
#include "bpl/forms.hpp"
#include "bpl/pde.hpp"
#include "bpl/random_fields.hpp"

using namespace bpl;

namespace {

// Constant ρ̄ on a Gaussian disk of radius R solves 𝓛ρ = 1.
double disk_p(double R) { return 1.0 - (1.0 / R - R) * (std::exp(0.5 * R * R) - 1.0) / R; }

const SupportFunction& asym() {
  static const SupportFunction h = make_fourier({1.0, 0.0, 0.08, 0.03}, {0.05, 0.02});
  return h;
}

}  // namespace

TEST_CASE("basis layout and projection") {
  const Basis b(4);
  CHECK(b.dim() == 9);
  CHECK(b.frequency(0) == 0);
  const Basis e(6, true);
  CHECK(e.dim() == 7);
  for (int j = 0; j < e.dim(); ++j) CHECK(e.frequency(j) % 2 == 0);
  const TrigSeries s({0.3, 0.1, -0.2, 0.0, 0.05}, {0.0, 0.4, 0.0, 0.01});
  const TrigSeries back = b.to_series(b.project(s));
  for (int k = 0; k <= 4; ++k) {
    CHECK(back.cos_coeff(k) == doctest::Approx(s.cos_coeff(k)));
    CHECK(back.sin_coeff(k) == doctest::Approx(s.sin_coeff(k)));
  }
  const Eigen::MatrixXd V = b.values(32);
  const Eigen::MatrixXd D = b.derivatives(32);
  CHECK(V.rows() == 32);
  CHECK(V.cols() == 9);
  CHECK(D.col(0).norm() == 0.0);
}

TEST_CASE("Gaussian disk: concavity power in closed form") {
  for (double R : {0.25, 0.5, 1.0, 2.0, 3.0}) {
    CAPTURE(R);
    const WeightedBody wb(make_disk(R), Potential::gaussian());
    const RhoBarSolution s = solve_rho_bar(assemble(wb));
    CHECK(s.p == doctest::Approx(disk_p(R)).epsilon(1e-10));
    CHECK(s.energy == doctest::Approx(wb.boundary_integral(s.rho)).epsilon(1e-12));
    for (int k = 1; k < s.coeffs.size(); ++k) CHECK(std::abs(s.coeffs(k)) < 1e-12 * std::abs(s.coeffs(0)));
  }
  const WeightedBody unit(make_disk(1.0), Potential::gaussian());
  CHECK(solve_rho_bar(assemble(unit)).rho(0.7) == doctest::Approx(std::exp(0.5) - 1.0).epsilon(1e-13));
}

TEST_CASE("Lebesgue measure gives the volume exponent") {
  for (const SupportFunction& h : {make_disk(1.0), make_ellipse(2.0, 1.0), asym()}) {
    CHECK(concavity_power(WeightedBody(h, Potential::zero())) == doctest::Approx(0.5).epsilon(1e-10));
  }
}

TEST_CASE("strong residual of the Galerkin solution") {
  for (const Potential& u : {Potential::gaussian(), Potential::even_quartic(0.1).shifted({0.1, 0.05})}) {
    const WeightedBody wb(asym(), u);
    const RhoBarSolution s = solve_rho_bar(assemble(wb, 24));
    for (double v : apply_L_nodal(wb, s.rho)) CHECK(v == doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("the solution converges with the basis order") {
  const WeightedBody wb(make_ellipse(2.0, 1.0), Potential::gaussian());
  CHECK(std::abs(concavity_power(wb, 24) - concavity_power(wb, 32)) < 1e-11);
}

TEST_CASE("p is the minimum of the Rayleigh quotient") {
  const WeightedBody wb(asym(), Potential::even_quartic(0.1));
  const double p = concavity_power(wb);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    BoundaryField rho = random_boundary_field(rng);
    rho += BoundaryField::constant(3.0);
    CHECK(rayleigh(wb, rho) >= p * (1.0 - 1e-12));
  }
  CHECK(rayleigh(wb, solve_rho_bar(assemble(wb)).rho) == doctest::Approx(p).epsilon(1e-12));
  // G is positive definite, so P is coercive on the span.
  const PoincareSystem sys = assemble(wb);
  CHECK(sys.chol.info() == Eigen::Success);
}

TEST_CASE("zero-mean fields have no Rayleigh quotient") {
  const WeightedBody wb(make_disk(1.0), Potential::gaussian());
  bool thrown = false;
  try {
    (void)rayleigh(wb, BoundaryField(TrigSeries::sine(1)));
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::ZeroMean;
  }
  CHECK(thrown);
}

TEST_CASE("symmetric data give even solutions") {
  const WeightedBody wb(make_fourier({1.0, 0.0, 0.1, 0.0, 0.02}, {}), Potential::even_quartic(0.1));
  const RhoBarSolution s = solve_rho_bar(assemble(wb));
  CHECK(s.rho.series().max_abs_odd_coeff() < 1e-13);
  CHECK(concavity_power(wb, kDefaultModes, true) == doctest::Approx(s.p).epsilon(1e-13));
}

TEST_CASE("support function identity") {
  for (const Potential& u : {Potential::gaussian(), Potential::quadratic((Mat2() << 1, 0.2, 0.2, 4).finished()),
                             Potential::even_quartic(0.1).shifted({0.1, -0.1})}) {
    const SupportIdentityReport r = support_identity_check(WeightedBody(asym(), u));
    CHECK(r.pass);
  }
}

TEST_CASE("assembly preconditions") {
  const WeightedBody wb(make_disk(1.0), Potential::gaussian(), {64, 16});
  const auto kind = [&](int N) {
    try {
      (void)assemble(wb, N);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ConfigError;
  };
  CHECK(kind(3) == ErrorKind::InvalidArgument);
  CHECK(kind(32) == ErrorKind::InvalidArgument);
  CHECK(kind(16) == ErrorKind::ConfigError);
}
