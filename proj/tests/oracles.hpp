#pragma once

// Reference values computed independently of the library.

#include <boost/math/special_functions/beta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <complex>

#include "wcauchy/conformal.hpp"

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_50;

/// B(a, b) in 50-digit arithmetic.
inline double beta(double a, double b) {
    return static_cast<double>(boost::math::beta(big(a), big(b)));
}

/// ω_k for ω(t) = t^α: 2 B(2k+2, α+1).
inline double power_moment(int k, double alpha) { return 2.0 * beta(2.0 * k + 2.0, alpha + 1.0); }

/// σ_k for ω(t) = t^α: B(2k+2, 1-α).
inline double power_inverse_moment(int k, double alpha) { return beta(2.0 * k + 2.0, 1.0 - alpha); }

/// M_k for ω(t) = t^α: (k+1)² B(2k+2, 1+α) B(2k+2, 1-α), in extended precision.
inline double power_ratio(int k, double alpha) {
    const big a = 2 * k + 2;
    const big kk = k + 1;
    return static_cast<double>(kk * kk * boost::math::beta(a, big(1.0 + alpha)) *
                               boost::math::beta(a, big(1.0 - alpha)));
}

/// Area enclosed by θ ↦ φ(e^{iθ}) via (1/2i)∮ z̄ dz, trapezoid on n points
/// (exact for polynomial boundaries once n exceeds twice the degree).
inline double green_area(const wcauchy::ConformalMap& map, int n = 4096) {
    std::complex<double> acc{};
    for (int j = 0; j < n; ++j) {
        const double th = 2.0 * M_PI * j / n;
        acc += std::conj(map.boundary_point(th)) * map.boundary_tangent(th);
    }
    return (acc * (2.0 * M_PI / n) / std::complex<double>(0.0, 2.0)).real();
}

}  // namespace oracle
