#pragma once

#include <climits>
#include <string>
#include <vector>

#include "wcauchy/conformal.hpp"
#include "wcauchy/series.hpp"
#include "wcauchy/transform.hpp"
#include "wcauchy/weights.hpp"

namespace wcauchy {

enum class CutoffShape { linear_ramp, smoothstep };

/// α_n: continuous on [0,1], 0 on [0, 1/n], 1 on [2/n, 1].
/// n == CutoffFamily::unbounded stands for α ≡ 1.
struct CutoffFamily {
    static constexpr int unbounded = INT_MAX;

    CutoffShape shape = CutoffShape::linear_ramp;
    int n = 2;

    bool is_unbounded() const { return n == unbounded; }
};

double cutoff_eval(const CutoffFamily& c, double t);

/// G_n = {z ∈ G : |ψ(z)| < 1 - 1/n}.
struct ApproximatingDomain {
    ConformalMap map;
    int n = 2;

    double radius() const { return 1.0 - 1.0 / n; }
    bool contains(cplx z) const;
    /// Checks Ḡ_n ⊂ G_{n+1} ⊂ G on `samples` points of ∂G_n mapped back
    /// through ψ.
    bool check_nesting(int samples = 64) const;
};

/// μ_j^n = 2∫₀¹ r^{2j+1} (α_n ω)(1-r) dr.
double cutoff_moment(const MomentSequence& moments, const CutoffFamily& c, int j);

/// ω_j - μ_j^n = 2∫₀¹ r^{2j+1} ((1-α_n) ω)(1-r) dr, computed directly.
double cutoff_deficit(const MomentSequence& moments, const CutoffFamily& c, int j);

/// Laurent coefficients of γ_n: b_k^n = -conj(a_{k-1}) μ_{k-1}^n for
/// k = 1..min(K, deg+1). Reduces to cauchy_transform_disk for α ≡ 1.
LaurentSeries gamma_n_coeffs(const TaylorSeries& h1, const MomentSequence& moments,
                             const CutoffFamily& c, int window);

struct GammaQuadOptions {
    double standoff = 0.05;
    int angular = 0;
    int inner_depth = 4;
};

/// γ_n(ζ) = (1/π) ∬_G conj(g) ω(1-|ψ|) α_n(1-|ψ|) / (z - ζ) dm₂ by 2D
/// quadrature over the support |w| <= 1 - 1/n. Throws StandoffError when
/// dist(ζ, Ḡ_n) < options.standoff.
cplx gamma_n_eval(const TaylorSeries& h1, const MomentSequence& moments, const ConformalMap& map,
                  const CutoffFamily& c, cplx zeta, const GammaQuadOptions& options = {});

/// γ_n(ζ) = Σ_j conj(a_j) μ_j^n c_j(ζ) via the kernel expansion; valid for
/// ζ outside Ḡ_n, in particular on ∂G.
cplx gamma_n_expansion(const TaylorSeries& h1, const MomentSequence& moments,
                       const ConformalMap& map, const CutoffFamily& c, cplx zeta);

struct CauchyTypeIntegral {
    cplx value;
    LaurentSeries window;  // b_k = f_{-k}
};

/// Exterior Cauchy projection of boundary samples f(e^{iθ_j}):
/// P(ζ) = Σ_{k>=1} f_{-k} ζ^{-k} = -(1/2πi) ∮_{|t|=1} f(t)/(t - ζ) dt,
/// evaluated by the trapezoid rule on the samples. The Laurent window
/// comes from fourier_coeffs. Requires |ζ| >= 1 + standoff.
CauchyTypeIntegral cauchy_type_integral(std::span<const cplx> samples, cplx zeta, int window,
                                        double standoff = 0.05);

enum class BoundaryRoute { quadrature, expansion };

/// Samples of γ_n∘φ at θ_j = 2πj/N.
std::vector<cplx> gamma_n_boundary_samples(const TaylorSeries& h1, const MomentSequence& moments,
                                           const ConformalMap& map, const CutoffFamily& c,
                                           int sample_count, BoundaryRoute route);

/// Fourier window of γ_n∘φ, K = window, sampled through `route`.
BoundaryFunction gamma_n_boundary_window(const TaylorSeries& h1, const MomentSequence& moments,
                                         const ConformalMap& map, const CutoffFamily& c,
                                         int window, BoundaryRoute route);

struct ConvergenceRow {
    int n = 0;  // CutoffFamily::unbounded for the α ≡ 1 row
    double tail_mass = 0.0;
    double sup_dev = 0.0;
    double bound = 0.0;
    double rho_n = 0.0;
    double g_norm = 0.0;
    bool pass = false;
};

struct ConvergenceReport {
    double radius = 0.0;
    double distance = 0.0;  // dist(compact, Ḡ)
    double c_k = 0.0;       // 1/distance
    std::vector<ConvergenceRow> rows;
    bool monotone = false;  // sup_dev nonincreasing along the list
    bool pass = false;
};

/// Per n: sup over `points` points of |ζ| = R of |γ - γ_n|, the bound
/// (C_K/π)‖g‖ tail_mass(n)^{1/2} with C_K = 1/dist(|ζ| = R, Ḡ), and ρ_n.
ConvergenceReport convergence_report(const TaylorSeries& h1, const MomentSequence& moments,
                                     const ConformalMap& map, CutoffShape shape,
                                     const std::vector<int>& n_list, double radius,
                                     int points = 256);

struct RhoBoundRow {
    int n = 0;
    double rho_n = 0.0;
    double max_term_excess = 0.0;  // max_k (|b_k^n|²/ω_{k-1} - |a_{k-1}|² ω_{k-1})
    bool pass = false;
};

struct RhoBoundReport {
    double g_norm = 0.0;
    std::vector<RhoBoundRow> rows;
    bool pass = false;
};

/// ρ(γ_n∘φ) <= ‖g‖ + 1e-9 and the per-term domination for every n. With a
/// non-identity map the coefficients come from the sampled boundary window.
RhoBoundReport rho_bound_check(const TaylorSeries& h1, const MomentSequence& moments,
                               CutoffShape shape, const std::vector<int>& n_list, int window,
                               const ConformalMap& map = ConformalMap::identity());

struct MembershipReport {
    bool integrable = false;
    double integrability_value = 0.0;
    bool analyticity = false;  // Ḡ_n ⊂ G_{n+1} ⊂ G on every checked n
    bool convergence = false;  // sup deviation on the test circle falls with n
    bool rho_bounded = false;  // rho_n stays below the norm of g
    bool routes_agree = false; // kernel expansion vs 2D quadrature spot check
    double route_discrepancy = 0.0;
    std::vector<ConvergenceReport> convergence_reports;
    RhoBoundReport rho_report;
    bool pass = false;
    std::string reason;
};

MembershipReport witness_membership(const TaylorSeries& h1, const MomentSequence& moments,
                                    const ConformalMap& map, CutoffShape shape,
                                    const std::vector<int>& n_list,
                                    const std::vector<double>& compact_radii, int window);

std::vector<int> default_n_list();

}  // namespace wcauchy
