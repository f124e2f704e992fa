// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include <doctest.h>

#include "bpl/analysis.hpp"
#include "bpl/errors.hpp"
#include "bpl/random_fields.hpp"

using namespace bpl;

TEST_CASE("lambda_1 on disks") {
  // H_μ = 1/R − R vanishes on the unit disk, so the energy is never positive.
  const Lambda1Result unit = lambda1(assemble(WeightedBody(make_disk(1.0), Potential::gaussian())));
  CHECK(unit.infinite);
  CHECK(std::isinf(unit.value));
  const Lambda1Result small = lambda1(assemble(WeightedBody(make_disk(0.5), Potential::gaussian())));
  CHECK_FALSE(small.infinite);
  CHECK(small.value > 1.0);
  // cos θ: energy H_μ·πRe^{−R²/2} per stiffness πe^{−R²/2}, so λ₁ = 1/(R·H_μ).
  CHECK(small.value == doctest::Approx(1.0 / (0.5 * 1.5)).epsilon(1e-10));
}

TEST_CASE("coercivity constant") {
  const PoincareSystem sys = assemble(WeightedBody(make_disk(1.0), Potential::gaussian()));
  CHECK(coercivity_constant(sys) == doctest::Approx(0.5).epsilon(1e-10));
  for (const Potential& u : {Potential::gaussian(), Potential::even_quartic(0.1)}) {
    const WeightedBody wb(make_fourier({1.0, 0.0, 0.08, 0.03}, {0.05, 0.02}), u);
    // Nested Galerkin spaces: the pencil minimum cannot increase with N.
    const double c16 = coercivity_constant(assemble(wb, 16));
    const double c20 = coercivity_constant(assemble(wb, 20));
    CHECK(c16 > 0.0);
    CHECK(c20 <= c16 * (1.0 + 1e-12));
  }
}

TEST_CASE("ellipse coercivity constant decreases toward the smallest radius of curvature") {
  // High modes concentrate where r is smallest; C(N) approaches min r from above.
  const WeightedBody wb(make_ellipse(2.0, 1.0), Potential::gaussian());
  const double rmin = 1.0 / wb.body().max_curvature();
  double prev = std::numeric_limits<double>::infinity();
  for (int N : {12, 16, 20, 24}) {
    const double c = coercivity_constant(assemble(wb, N));
    CHECK(c < prev);
    CHECK(c > rmin * (1.0 - 1e-3));
    prev = c;
  }
}

TEST_CASE("stability scaling has slope one half") {
  const WeightedBody wb(make_ellipse(2.0, 1.0), Potential::even_quartic(0.1));
  const PoincareSystem sys = assemble(wb);
  std::mt19937_64 rng(4);
  const StabilityScaling s = stability_scaling(wb, sys, random_boundary_field(rng), {1e-3, 1e-2, 1e-1, 1.0});
  CHECK(s.slope == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.worst_ratio <= 1.0 + 1e-9);
  CHECK(s.constant == doctest::Approx(1.0 / std::sqrt(coercivity_constant(sys))));
}

TEST_CASE("interpolation ratio is bounded") {
  const WeightedBody wb(make_disk(1.0), Potential::gaussian());
  std::mt19937_64 rng(2);
  const InterpolationResult r = interpolation_constant(wb, 400, rng);
  CHECK(std::isfinite(r.max_ratio));
  CHECK(r.max_ratio >= r.max_ratio_half);
  CHECK(r.growth() < 0.2);
}

TEST_CASE("BM segments") {
  const Potential g = Potential::gaussian();
  const BMReport a = bm_check(make_disk(0.5), make_disk(1.5), g, 0.5);
  CHECK(a.pass);
  CHECK(a.t.size() == 21);
  CHECK(a.slack.front() == doctest::Approx(0.0).scale(1.0));
  CHECK(a.slack.back() == doctest::Approx(0.0).scale(1.0));
  const BMReport b = bm_check(make_ellipse(2.0, 1.0), make_ellipse(1.0, 2.0), Potential::zero(), 0.5, 11);
  CHECK(b.pass);
  CHECK(b.slack[5] > 0.0);
  // Homothetic bodies under Lebesgue measure are an equality case at p = 1/2.
  const BMReport c = bm_check(make_disk(0.5), make_disk(1.5), Potential::zero(), 0.5, 11);
  CHECK(std::abs(c.min_slack) < 1e-12);
  const BMReport d = bm_check(make_disk(0.5), make_disk(1.5), g, 0.5, 5, {}, true);
  CHECK(d.local_p_min >= 0.5);
}

TEST_CASE("local concavity by finite differences") {
  // μ([(1+t)h]) = π(1+t)² for the unit disk and Lebesgue measure.
  const SupportFunction h = make_disk(1.0);
  const BoundaryField f(h.series());
  CHECK(std::abs(local_concavity_fd(h, Potential::zero(), f, 0.5)) < 1e-6);
  CHECK(local_concavity_fd(h, Potential::zero(), f, 0.0) == doctest::Approx(-2.0).epsilon(1e-5));
}

TEST_CASE("reformulation of the concavity power") {
  for (const SupportFunction& h : {make_disk(1.0), make_disk(2.0), make_ellipse(2.0, 1.0)}) {
    for (const Potential& u : {Potential::gaussian(), Potential::even_quartic(0.1)}) {
      const ReformulationReport r = reformulation_check(WeightedBody(h, u));
      CHECK(r.identity_residual < 1e-8);
      CHECK(r.interaction == doctest::Approx(r.closed_form).epsilon(1e-8).scale(1.0));
      CHECK(r.sign_agrees);
      CHECK(r.symmetric_setting);
    }
  }
}

TEST_CASE("pinching bounds") {
  const PinchingBoundsReport g = pinching_bounds(WeightedBody(make_disk(1.0), make_potential({})));
  CHECK(g.pass());
  // ∫|x|² dμ / μ(K) on the unit disk.
  const double e = std::exp(-0.5);
  CHECK(g.moment == doctest::Approx((2.0 - 3.0 * e) / (1.0 - e)).epsilon(1e-12));
  PotentialDescriptor q;
  q.kind = "quadratic";
  q.A = (Mat2() << 1.0, 0.0, 0.0, 4.0).finished();
  const PinchingBoundsReport r = pinching_bounds(WeightedBody(make_ellipse(2.0, 1.0), make_potential(q)));
  CHECK(r.pass());
  CHECK(r.p >= 0.1);
  bool thrown = false;
  try {
    (void)pinching_bounds(WeightedBody(make_disk(1.0), Potential::even_quartic(0.1)));
  } catch (const Error& err) {
    thrown = err.kind() == ErrorKind::PinchingUndeclared;
  }
  CHECK(thrown);
}
