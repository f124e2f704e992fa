// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include <doctest.h>

#include "bpl/trig.hpp"

using namespace bpl;

TEST_CASE("derivatives of a single mode") {
  const TrigSeries c = TrigSeries::cosine(3, 2.0);
  const TrigSeries s = TrigSeries::sine(2);
  for (double t : {0.0, 0.3, 1.7, 4.0}) {
    CHECK(c(t) == doctest::Approx(2.0 * std::cos(3 * t)).epsilon(1e-14));
    CHECK(c.derivative(t, 1) == doctest::Approx(-6.0 * std::sin(3 * t)).epsilon(1e-14));
    CHECK(c.derivative(t, 2) == doctest::Approx(-18.0 * std::cos(3 * t)).epsilon(1e-14));
    CHECK(s.derivative(t, 1) == doctest::Approx(2.0 * std::cos(2 * t)).epsilon(1e-14));
  }
}

TEST_CASE("from_samples interpolates exactly, Nyquist included") {
  const int M = 32;
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::vector<double> v(M);
  for (double& x : v) x = g(rng);
  const TrigSeries s = TrigSeries::from_samples(v);
  CHECK(s.order() <= M / 2);
  for (int j = 0; j < M; ++j) CHECK(s(grid_angle(j, M)) == doctest::Approx(v[j]).epsilon(1e-12));
}

TEST_CASE("from_samples recovers a band-limited series") {
  const TrigSeries a({1.0, 0.2, -0.1, 0.03}, {0.0, 0.5, 0.0, -0.07});
  const TrigSeries b = TrigSeries::from_samples(a.sample(64).value);
  for (int k = 0; k <= 3; ++k) {
    CHECK(b.cos_coeff(k) == doctest::Approx(a.cos_coeff(k)).epsilon(1e-14).scale(1.0));
    CHECK(b.sin_coeff(k) == doctest::Approx(a.sin_coeff(k)).epsilon(1e-14).scale(1.0));
  }
  CHECK(std::abs(b.cos_coeff(10)) < 1e-15);
}

TEST_CASE("sample agrees with pointwise evaluation") {
  const TrigSeries a({0.5, 0.0, 0.2}, {0.0, 0.1, 0.0, 0.05});
  const auto s = a.sample(16);
  for (int j = 0; j < 16; ++j) {
    const double t = grid_angle(j, 16);
    CHECK(s.value[j] == doctest::Approx(a(t)).epsilon(1e-14));
    CHECK(s.d1[j] == doctest::Approx(a.derivative(t, 1)).epsilon(1e-13).scale(1.0));
    CHECK(s.d2[j] == doctest::Approx(a.derivative(t, 2)).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("algebra and truncation") {
  const TrigSeries a({1.0, 2.0}, {0.0, 3.0});
  const TrigSeries b = TrigSeries::cosine(4, 1.0);
  const TrigSeries c = 2.0 * a - b;
  CHECK(c.cos_coeff(0) == 2.0);
  CHECK(c.sin_coeff(1) == 6.0);
  CHECK(c.cos_coeff(4) == -1.0);
  CHECK(c.truncated(2).order() <= 2);
  CHECK(c.truncated(2).cos_coeff(4) == 0.0);
  CHECK(c.max_abs_odd_coeff() == 6.0);
  CHECK(TrigSeries::cosine(2).max_abs_odd_coeff() == 0.0);
}
