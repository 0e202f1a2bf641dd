// Random instances for property checks.  Everything is driven by one
// std::mt19937_64, so a seed fixes the whole sequence.
#pragma once

#include <random>

#include "dani/autgroup.hpp"

namespace dani {

using Rng = std::mt19937_64;

/// n/d with |n| <= height, 1 <= d <= height.
Rational random_rational(Rng& rng, int height);
RatPoly random_ratpoly(Rng& rng, int max_degree, int height);
/// Terms with x-index in [lo, hi] and z-degree at most zdeg (before the
/// factors of p needed at negative indices).
SurfacePoly random_function(Rng& rng, const SurfaceSpec& s, int lo, int hi, int zdeg, int height);
/// h1 nu_x + h2 nu_y + h3 nu_z with small random h_i.
VectorField random_field(Rng& rng, const SurfaceSpec& s);
/// Alternating word of the given length, deg a <= max_degree, optional torus.
AutElement random_element(Rng& rng, const SurfaceSpec& s, int length, int max_degree, int height);
/// A rational point of the surface; x = 0 only when p has a rational root.
SurfacePoint random_point(Rng& rng, const SurfaceSpec& s, int height);

}  // namespace dani
