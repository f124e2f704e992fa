// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numeric>

#include <doctest.h>

#include "bpl/errors.hpp"
#include "bpl/quad.hpp"

using namespace bpl;

TEST_CASE("pairwise summation") {
  std::vector<double> v(1000);
  std::iota(v.begin(), v.end(), 1.0);
  CHECK(pairwise_sum(v) == 500500.0);
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
  std::vector<double> small(1 << 20, 0.1);
  CHECK(std::abs(pairwise_sum(small) - 0.1 * (1 << 20)) < 1e-8);
}

TEST_CASE("Gauss-Legendre on the unit interval") {
  for (int Q : {16, 32}) {
    const GaussLegendreRule g = gauss_legendre_unit(Q);
    REQUIRE(g.nodes.size() == static_cast<std::size_t>(Q));
    CHECK(pairwise_sum(g.weights) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::is_sorted(g.nodes.begin(), g.nodes.end()));
    for (int k = 0; k < 2 * Q; ++k) {
      double s = 0.0;
      for (int i = 0; i < Q; ++i) s += g.weights[i] * std::pow(g.nodes[i], k);
      CHECK(s == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
    }
  }
}

TEST_CASE("config validation") {
  const auto kind = [](QuadratureConfig c) {
    try {
      c.validate();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ConfigError;
  };
  CHECK(kind({255, 32}) == ErrorKind::InvalidArgument);
  CHECK(kind({32, 32}) == ErrorKind::InvalidArgument);
  CHECK(kind({256, 8}) == ErrorKind::InvalidArgument);
  CHECK(kind({256, 32}) == ErrorKind::ConfigError);
}

TEST_CASE("Gaussian disk masses in closed form") {
  for (double R : {0.5, 1.0, 2.0}) {
    const WeightedBody wb(make_disk(R), Potential::gaussian());
    const double e = std::exp(-0.5 * R * R);
    CHECK(wb.mu_K() == doctest::Approx(kTwoPi * (1.0 - e)).epsilon(1e-13));
    CHECK(wb.mu_boundary() == doctest::Approx(kTwoPi * R * e).epsilon(1e-13));
    // ∫ |x|² dμ = 2π(2 − (R² + 2)e^{−R²/2}).
    const double m2 = wb.interior_integral(InteriorField([](const Vec2& x) { return x.squaredNorm(); }));
    CHECK(m2 == doctest::Approx(kTwoPi * (2.0 - (R * R + 2.0) * e)).epsilon(1e-12));
  }
}

TEST_CASE("Lebesgue moments of an ellipse") {
  const WeightedBody wb(make_ellipse(2.0, 1.0), Potential::zero());
  CHECK(wb.mu_K() == doctest::Approx(kTwoPi).epsilon(1e-13));
  // ∫ x² over x²/a² + y²/b² ≤ 1 is πa³b/4.
  const double ix = wb.interior_integral(InteriorField([](const Vec2& x) { return x.x() * x.x(); }));
  CHECK(ix == doctest::Approx(M_PI * 8.0 / 4.0).epsilon(1e-12));
  CHECK(wb.boundary_integral(BoundaryField::constant(1.0)) == doctest::Approx(wb.body().perimeter()).epsilon(1e-13));
}

TEST_CASE("divergence theorem links interior and boundary quadrature") {
  // ∫_K div(F e^{−u}) dx = ∫_∂K ⟨F,ν⟩ e^{−u}, with F = x: div = 2 − ⟨∇u,x⟩.
  const SupportFunction h = make_fourier({1.0, 0.0, 0.08, 0.03}, {0.05, 0.02});
  const Potential u = Potential::even_quartic(0.1).shifted({0.1, 0.2});
  const WeightedBody wb(h, u);
  const double lhs = wb.interior_integral(
      [](const WeightedBody::InteriorNode& n) { return 2.0 - n.u.gradient.dot(n.x); });
  const double rhs = wb.boundary_integral([](const BoundaryPoint& p) { return p.x.dot(p.normal); });
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("doubling the grid leaves smooth integrals unchanged") {
  const SupportFunction h = make_ellipse(2.0, 1.0);
  const Potential u = Potential::quadratic((Mat2() << 1.0, 0.0, 0.0, 4.0).finished());
  const QuadratureConfig c;
  const double a = WeightedBody(h, u, c).mu_K();
  const double b = WeightedBody(h, u, c.doubled()).mu_K();
  CHECK(std::abs(a - b) <= 1e-12 * a);
}
