// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <doctest.h>

#include "bpl/errors.hpp"
#include "bpl/flow.hpp"

using namespace bpl;

namespace {

Mat2 spd(double a, double b, double c) {
  Mat2 A;
  A << a, b, b, c;
  return A;
}

const SupportFunction& asym() {
  static const SupportFunction h = make_fourier({1.0, 0.0, 0.08, 0.03}, {0.05, 0.02});
  return h;
}

BoundaryField direction() { return BoundaryField(TrigSeries({0.2, 0.1, 0.05}, {0.0, -0.1, 0.03})); }

}  // namespace

TEST_CASE("X_t carries the boundary of K onto the boundary of K_t") {
  const SupportFunction& h = asym();
  const BoundaryField f = direction();
  const double t = 0.3;
  const SupportFunction kt = wulff_perturb(h, f, t);
  for (double th : {0.1, 1.3, 4.0}) {
    const Vec2 y = vector_field_X(h, f, t, h.point_at(th).x);
    CHECK((y - kt.point_at(th).x).norm() < 1e-10);
  }
  CHECK(vector_field_X(h, f, t, Vec2::Zero()).norm() == 0.0);
}

TEST_CASE("homothety flow in closed form") {
  // f = αh, ψ = αu*: K_t = λK and u_t = λu(·/λ) with λ = 1 + tα, so on the
  // Gaussian unit disk I(t) = 2πλ(1 − e^{−λ/2}).
  const SupportFunction h = make_disk(1.0);
  const Potential g = Potential::gaussian();
  for (double alpha : {0.5, 1.0}) {
    const BoundaryField f(h.series() * alpha);
    const Psi psi = Psi::scaled_conjugate(g, alpha);
    for (double t : {-0.2, 0.1, 0.3}) {
      const double lam = 1.0 + t * alpha;
      CHECK(flow_I(h, g, f, psi, t) == doctest::Approx(kTwoPi * lam * (1.0 - std::exp(-0.5 * lam))).epsilon(1e-12));
    }
    // S″(0) = α²(−1 − e^{−1/2}/(4(1 − e^{−1/2})²)), strictly negative.
    const double e = std::exp(-0.5);
    const ShapeDerivatives sd = shape_derivatives(WeightedBody(h, g), f, psi);
    CHECK(sd.S2 == doctest::Approx(alpha * alpha * (-1.0 - 0.25 * e / ((1.0 - e) * (1.0 - e)))).epsilon(1e-10));
    CHECK(sd.S2 < 0.0);
  }
}

TEST_CASE("shape derivatives against finite differences") {
  const std::vector<std::pair<Potential, Psi>> cases = {
      {Potential::gaussian(), Psi::zero()},
      {Potential::gaussian(), Psi::quadratic(spd(0.3, 0.0, 0.3), {0.1, -0.05}, 0.2)},
      {Potential::quadratic(spd(1.0, 0.0, 4.0)), Psi::quadratic(spd(0.3, 0.05, 0.2), {0.1, -0.05}, 0.2)},
      {Potential::even_quartic(0.1), Psi::scaled_conjugate(Potential::even_quartic(0.1), 0.5)},
      {Potential::even_quartic(0.1).shifted({0.1, 0.0}), Psi::quadratic(spd(0.3, 0.0, 0.3), {0.1, -0.05}, 0.0)},
  };
  const BoundaryField f = direction();
  for (const auto& [u, psi] : cases) {
    CAPTURE(u.name());
    CAPTURE(psi.name());
    const ShapeDerivatives sd = shape_derivatives(WeightedBody(asym(), u), f, psi);
    const auto fd = fd_shape_derivatives(asym(), u, f, psi);
    CHECK(sd.I1 == doctest::Approx(fd.I1).epsilon(1e-6));
    CHECK(sd.I2 == doctest::Approx(fd.I2).epsilon(1e-4));
  }
}

TEST_CASE("the marginal log-integral is concave") {
  const Psi psi = Psi::quadratic(spd(0.3, 0.0, 0.3), {0.1, -0.05}, 0.2);
  for (const Potential& u : {Potential::gaussian(), Potential::even_quartic(0.1)}) {
    const MarginalTable tab = marginal_S(asym(), u, {direction(), psi, 0.1, 11});
    CHECK(tab.t.size() == 11);
    CHECK(tab.second_diff.size() == 9);
    CHECK(tab.concave());
    CHECK(tab.S[5] == doctest::Approx(std::log(WeightedBody(asym(), u).mu_K())).epsilon(1e-13));
  }
}

TEST_CASE("an oversized window is halved until admissible") {
  const BoundaryField f(TrigSeries::cosine(3, 0.3));
  const MarginalTable tab = marginal_S(make_disk(1.0), Potential::gaussian(), {f, Psi::zero(), 2.0, 5});
  CHECK(tab.halvings > 0);
  CHECK(tab.epsilon < 2.0);
  CHECK(tab.concave());
}

TEST_CASE("flow and forms agree on the second variation") {
  const BoundaryField f = direction();
  for (const Potential& u : {Potential::gaussian(), Potential::even_quartic(0.1).shifted({0.05, 0.1})}) {
    for (const Psi& psi : {Psi::zero(), Psi::quadratic(spd(0.3, 0.0, 0.2), {0.1, 0.0}, 0.1)}) {
      const MeanFormFromFlow m = mean_form_from_flow(WeightedBody(asym(), u), f, psi);
      CHECK(std::abs(m.difference) <= 1e-9 * m.scale);
      CHECK(m.flow_value <= 1e-12);
    }
  }
}

TEST_CASE("Lebesgue bodies only move their boundary") {
  bool thrown = false;
  try {
    (void)marginal_S(make_disk(1.0), Potential::zero(), {direction(), Psi::affine({1.0, 0.0}), 0.1, 5});
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::LebesgueModeRestriction;
  }
  CHECK(thrown);
  const MarginalTable tab = marginal_S(asym(), Potential::zero(), {direction(), Psi::zero(), 0.1, 7});
  CHECK(tab.concave());
}
