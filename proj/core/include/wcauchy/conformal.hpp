#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "wcauchy/series.hpp"

namespace wcauchy {

struct PullbackOptions {
    int max_degree = 512;
    /// Tolerated relative l2 mass of dropped Taylor coefficients (only
    /// non-polynomial maps produce an infinite expansion).
    double truncation_tol = 1e-14;
};

struct UnivalenceReport {
    bool pass = false;
    double min_derivative = 0.0;
    int derivative_zeros_inside = 0;
    bool boundary_simple = false;
    int winding_number = 0;
    std::string witness;
};

/// Univalent map φ of the closed unit disk onto the closure of a Jordan
/// domain G, with φ(0) = 0 for the polynomial family.
class ConformalMap {
public:
    enum class Kind { identity, polynomial, moebius };

    static ConformalMap identity();
    /// φ(w) = Σ_{k=1}^{d} c_k w^k; coefficients[0] is c_1 and must be nonzero.
    static ConformalMap polynomial(std::vector<cplx> coefficients);
    /// φ(w) = λ (w - a) / (1 - ā w), |a| < 1, λ ≠ 0.
    static ConformalMap moebius(cplx a, cplx lambda);

    Kind kind() const { return kind_; }
    std::span<const cplx> coefficients() const { return coeffs_; }
    cplx moebius_center() const { return a_; }
    cplx moebius_scale() const { return lambda_; }
    /// Polynomial degree (1 for identity and Möbius maps).
    int degree() const;
    std::string describe() const;

    double newton_tol = 1e-12;
    int newton_max_iter = 64;

    cplx forward(cplx w) const;
    cplx derivative(cplx w) const;
    /// ψ(z): Newton iteration on φ(w) = z with a grid-search restart.
    /// Throws OutsideDomainError on non-convergence or when the root lies
    /// outside the closed disk.
    cplx inverse(cplx z) const;

    cplx boundary_point(double theta) const;
    /// d/dθ φ(e^{iθ}) = i e^{iθ} φ'(e^{iθ}).
    cplx boundary_tangent(double theta) const;

    /// Coefficients of (h∘φ)·φ'. Throws TruncationError when the result
    /// would exceed options.max_degree (reporting the dropped l2 mass).
    TaylorSeries pullback(const TaylorSeries& h, const PullbackOptions& options = {}) const;

    /// Taylor coefficients c_0..c_degree of w ↦ φ'(w)/(φ(w) - ζ) at w = 0.
    /// Valid as an expansion on |w| < |ψ-root nearest 0|; requires ζ ≠ φ(0).
    std::vector<cplx> kernel_taylor(cplx zeta, int degree) const;

    UnivalenceReport check_univalent(int grid = 1024) const;

    /// Distance from ζ to φ({|w| <= radius}) when ζ lies outside that set,
    /// and a non-positive value (minus the boundary distance) when inside.
    double signed_distance(cplx zeta, double radius = 1.0, int samples = 4096) const;

    /// max |φ(radius·e^{iθ})| over a sampled circle.
    double max_modulus(double radius = 1.0, int samples = 1024) const;

    /// Angular trapezoid count that integrates |φ'|² on circles exactly
    /// (polynomial maps) or to machine precision (Möbius maps).
    int angular_resolution() const;

private:
    ConformalMap() = default;

    Kind kind_ = Kind::identity;
    std::vector<cplx> coeffs_;       // c_1..c_d
    std::vector<cplx> dcoeffs_;      // φ' coefficients, index m ↔ w^m
    cplx a_{};
    cplx lambda_{1.0, 0.0};
};

}  // namespace wcauchy
