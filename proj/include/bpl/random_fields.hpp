// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>

#include "bpl/fields.hpp"

namespace bpl {

/// Trigonometric polynomial of the given order with N(0,1)/(1+k) coefficients.
BoundaryField random_boundary_field(std::mt19937_64& rng, int order = 6);

/// Random quadratic plus a * sin(⟨w,x⟩ + b), with analytic gradient.
InteriorField random_interior_field(std::mt19937_64& rng);

}  // namespace bpl
