// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bpl/measure.hpp"
#include "bpl/pde.hpp"
#include "bpl/report.hpp"

namespace bpl {

struct NamedBody {
  std::string name;
  SupportFunction h;
};

struct NamedPotential {
  std::string name;
  Potential u;
};

/// disk(1), ellipse(2,1), and a non-symmetric Fourier body.
std::vector<NamedBody> matrix_bodies(int M = kDefaultGridSize);
/// disk(1), ellipse(2,1), and an origin-symmetric Fourier body.
std::vector<NamedBody> symmetric_bodies(int M = kDefaultGridSize);
/// gaussian, quadratic(diag(1,4)), even-quartic(0.1).
std::vector<NamedPotential> matrix_potentials();

struct SuiteOptions {
  QuadratureConfig quad;
  int N = kDefaultModes;
  std::uint64_t seed = 42;
  int pairs = 200;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  Json data = Json::object();
};

inline constexpr int kCriterionCount = 11;

/// Runs acceptance criterion `index` (1-based).
CriterionResult run_criterion(int index, const SuiteOptions& opt);
std::vector<CriterionResult> run_suite(const SuiteOptions& opt);

}  // namespace bpl
