#pragma once

// Shared by transform.cpp and approx.cpp: the weighted Cauchy kernel
// integral pulled back to the disk.

#include <functional>

#include "wcauchy/conformal.hpp"
#include "wcauchy/quadrature.hpp"
#include "wcauchy/series.hpp"

namespace wcauchy::detail {

/// max |φ'| on the unit circle.
double boundary_derivative_max(const ConformalMap& map);

/// Trapezoid count for w ↦ φ'(w)/(φ(w) - ζ) on |w| <= r_max when ζ sits at
/// distance `dist` from φ(r_max·𝔻̄); `extra` covers the polynomial factors.
int kernel_angular_count(const ConformalMap& map, double dist, double r_max, int extra);

/// (1/π) ∬_{|w|<1} conj(h₁(w)) φ'(w) density(1-|w|) / (φ(w) - ζ) dm(w), which
/// is (1/π) ∬_G conj(g) density(1-|ψ|) / (z - ζ) dm for g = h₁∘ψ / φ'∘ψ.
cplx kernel_integral(const TaylorSeries& h1, const ConformalMap& map,
                     const std::function<double(double)>& density, cplx zeta,
                     const quad::DiskRule& rule);

}  // namespace wcauchy::detail
