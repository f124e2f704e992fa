// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include <doctest.h>

#include "bpl/errors.hpp"
#include "bpl/measure.hpp"

using namespace bpl;

namespace {

Mat2 spd(double a, double b, double c) {
  Mat2 A;
  A << a, b, b, c;
  return A;
}

// sup_z ⟨y,z⟩ − u(z) by brute force on a grid, refined twice.
double grid_conjugate(const Potential& u, const Vec2& y) {
  Vec2 best = Vec2::Zero();
  double width = 4.0;
  double val = -u.value(best);
  for (int level = 0; level < 6; ++level) {
    const Vec2 c = best;
    for (int i = -40; i <= 40; ++i) {
      for (int j = -40; j <= 40; ++j) {
        const Vec2 z = c + width / 40.0 * Vec2(i, j);
        const double v = y.dot(z) - u.value(z);
        if (v > val) {
          val = v;
          best = z;
        }
      }
    }
    width /= 20.0;
  }
  return val;
}

std::vector<Potential> zoo() {
  return {Potential::gaussian(), Potential::quadratic(spd(1.0, 0.3, 4.0)),
          Potential::even_quartic(0.1), Potential::even_quartic(0.1).shifted({0.2, -0.1}).plus_constant(0.4)};
}

}  // namespace

TEST_CASE("analytic derivatives agree with central differences") {
  std::mt19937_64 rng(1);
  for (const Potential& u : zoo()) {
    CAPTURE(u.name());
    CHECK(check_derivatives(u, 50, 2.0, rng).ok());
  }
}

TEST_CASE("non-convex quadratic is rejected") {
  bool thrown = false;
  try {
    (void)Potential::quadratic(spd(1.0, 2.0, 1.0));
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::NotConvexPotential;
  }
  CHECK(thrown);
}

TEST_CASE("shift and offset") {
  const Potential u = Potential::gaussian().shifted({1.0, 0.0}).plus_constant(0.5);
  CHECK(u.value({1.0, 0.0}) == doctest::Approx(0.5));
  CHECK(u.value({0.0, 0.0}) == doctest::Approx(1.0));
  CHECK_FALSE(u.is_even());
  CHECK(Potential::gaussian().is_even());
}

TEST_CASE("conjugate against brute-force maximization") {
  for (const Potential& u : zoo()) {
    CAPTURE(u.name());
    for (const Vec2& y : {Vec2(0.3, -0.2), Vec2(1.0, 0.5), Vec2(-0.7, 0.1)}) {
      const ConjugateResult c = conjugate(u, y);
      CHECK(c.value == doctest::Approx(grid_conjugate(u, y)).epsilon(1e-9));
      // The maximizer satisfies ∇u(z) = y.
      CHECK((u.gradient(c.gradient) - y).norm() < 1e-11);
    }
  }
}

TEST_CASE("conjugate closed forms") {
  const Vec2 y(0.4, -1.2);
  CHECK(conjugate(Potential::gaussian(), y).value == doctest::Approx(0.5 * y.squaredNorm()).epsilon(1e-14));
  const Mat2 A = spd(2.0, 0.5, 1.0);
  CHECK(conjugate(Potential::quadratic(A), y).value ==
        doctest::Approx(0.5 * y.dot(A.inverse() * y)).epsilon(1e-13));
}

TEST_CASE("Young identity used by at_gradient") {
  const Potential u = Potential::even_quartic(0.1);
  const Psi psi = Psi::scaled_conjugate(u, 0.7);
  for (const Vec2& x : {Vec2(0.3, 0.2), Vec2(-1.0, 0.4)}) {
    const auto a = psi.at_gradient(u, x);
    CHECK(a.value == doctest::Approx(0.7 * (x.dot(u.gradient(x)) - u.value(x))).epsilon(1e-13));
    CHECK(a.value == doctest::Approx(0.7 * conjugate(u, u.gradient(x)).value).epsilon(1e-11));
  }
}

TEST_CASE("closed-form flows agree with the Newton path") {
  const Mat2 B = spd(0.3, 0.05, 0.2);
  const Vec2 b(0.1, -0.05);
  const std::vector<std::pair<Potential, Psi>> cases = {
      {Potential::gaussian(), Psi::quadratic(B, b, 0.2)},
      {Potential::quadratic(spd(1.0, 0.2, 4.0)).shifted({0.1, 0.3}).plus_constant(0.2), Psi::quadratic(B, b, 0.2)},
      {Potential::even_quartic(0.1), Psi::scaled_conjugate(Potential::even_quartic(0.1), 0.5)},
      {Potential::gaussian(), Psi::zero()},
  };
  for (const auto& [u, psi] : cases) {
    CAPTURE(u.name());
    CAPTURE(psi.name());
    for (double t : {-0.3, 0.2, 0.5}) {
      for (const Vec2& x : {Vec2(0.4, -0.3), Vec2(-1.1, 0.8)}) {
        const FlowPoint a = conjugate_flow(u, psi, t, x);
        const FlowPoint n = conjugate_flow_newton(u, psi, t, x);
        CHECK(a.value == doctest::Approx(n.value).epsilon(1e-11));
        CHECK((a.gradient - n.gradient).norm() < 1e-9);
        CHECK((a.hessian - n.hessian).norm() < 1e-8);
      }
    }
  }
}

TEST_CASE("homothety flow") {
  // (u* + tαu*)* = λu(x/λ) with λ = 1 + tα.
  const Potential u = Potential::even_quartic(0.1);
  const double t = 0.4, alpha = 0.5, lam = 1.0 + t * alpha;
  const Vec2 x(0.7, -0.2);
  CHECK(conjugate_flow(u, Psi::scaled_conjugate(u, alpha), t, x).value ==
        doctest::Approx(lam * u.value(x / lam)).epsilon(1e-13));
}

TEST_CASE("time derivatives of the flow") {
  const Potential u = Potential::even_quartic(0.1);
  const Psi psi = Psi::quadratic(spd(0.3, 0.0, 0.2), {0.1, 0.0}, 0.1);
  const Vec2 x(0.5, 0.4);
  const double t = 0.1, e = 1e-4;
  const FlowDerivatives d = flow_derivatives(u, psi, t, x);
  const auto U = [&](double s) { return conjugate_flow(u, psi, s, x).value; };
  CHECK(d.first == doctest::Approx((U(t + e) - U(t - e)) / (2 * e)).epsilon(1e-7));
  CHECK(d.second == doctest::Approx((U(t + e) - 2 * U(t) + U(t - e)) / (e * e)).epsilon(1e-4));
  // ∂_t u_t(x) = −ψ(∇u_t(x)).
  CHECK(d.first == doctest::Approx(-psi.value(conjugate_flow(u, psi, t, x).gradient)).epsilon(1e-10));
}

TEST_CASE("weighted mean curvature of a Gaussian disk") {
  const SupportFunction h = make_disk(1.5);
  for (double t : {0.0, 1.0, 3.0}) {
    CHECK(weighted_mean_curvature(h, Potential::gaussian(), t) == doctest::Approx(1.0 / 1.5 - 1.5));
  }
}

TEST_CASE("pinching constants") {
  const Potential g = make_potential({});
  REQUIRE(g.pinching());
  CHECK(g.pinching()->ratio() == doctest::Approx(1.0));
  PotentialDescriptor q;
  q.kind = "quadratic";
  q.A = spd(1.0, 0.0, 4.0);
  const Potential u = make_potential(q);
  REQUIRE(u.pinching());
  CHECK(u.pinching()->k1 == doctest::Approx(1.0));
  CHECK(u.pinching()->k2 == doctest::Approx(4.0));
  CHECK(check_pinching(u, {Vec2(0, 0), Vec2(1, 2)}).ok);
  // Declaring a larger k1 than the Hessian allows fails the check.
  CHECK_FALSE(check_pinching(u.with_pinching({2.0, 4.0}), {Vec2(0, 0)}).ok);
  bool thrown = false;
  try {
    (void)check_pinching(Potential::zero(), {Vec2(0, 0)});
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::PinchingUndeclared;
  }
  CHECK(thrown);
}
