#pragma once

#include <memory>
#include <optional>

#include "wcauchy/conformal.hpp"
#include "wcauchy/quadrature.hpp"
#include "wcauchy/series.hpp"
#include "wcauchy/weights.hpp"

namespace wcauchy {

/// Element g of B₂(G, ω), stored through its pullback h₁ = (g∘φ)·φ'.
struct BergmanElement {
    TaylorSeries series;
    std::shared_ptr<const MomentSequence> moments;
    std::optional<ConformalMap> map;
};

/// Element Σ b_k ζ^{-k} of B₂¹(C𝔻̄, ω).
struct CauchyImage {
    LaurentSeries series;
    std::shared_ptr<const MomentSequence> moments;
};

/// ‖g‖ = (π Σ |a_k|² ω_k)^{1/2}.
double bergman_norm_series(const BergmanElement& e);

/// (∬_𝔻 |h₁(w)|² ω(1-|w|) dm₂)^{1/2}. Requires M >= 4·deg + 8.
double bergman_norm_quadrature(const BergmanElement& e, const quad::DiskRule& rule);

/// b_k = -conj(a_{k-1}) ω_{k-1}.
CauchyImage cauchy_transform_disk(const BergmanElement& e);

struct CauchyQuadOptions {
    double standoff = 0.05;
    /// Angular node count; 0 picks one from the distance to the domain.
    int angular = 0;
    int inner_depth = 4;
    int outer_depth = 60;
};

/// (Kg)(ζ) = (1/π) ∬_G conj(g(z)) ω(1-|ψ(z)|) / (z - ζ) dm₂(z),
/// evaluated in the disk variable with g = h₁∘ψ / φ'∘ψ.
/// Throws StandoffError when dist(ζ, Ḡ) < options.standoff.
cplx cauchy_transform_quadrature(const BergmanElement& e, const ConformalMap& map, cplx zeta,
                                 const CauchyQuadOptions& options = {});

/// Kg(ζ) = Σ_j conj(a_j) ω_j c_j(ζ), with c_j the Taylor coefficients of the
/// kernel φ'(w)/(φ(w) - ζ). Valid for ζ outside Ḡ (and on ∂G).
cplx cauchy_transform_expansion(const BergmanElement& e, const ConformalMap& map, cplx zeta);

/// ‖γ‖ = (π Σ |b_k|² / ω_{k-1})^{1/2}.
double b21_norm_series(const CauchyImage& c);

/// (∬_{|ζ|>1} |F'(ζ)|² / ω(1 - 1/|ζ|) dm₂)^{1/2}; divergent when the
/// inverse weight is not integrable.
ImproperValue dirichlet_norm_quadrature(const CauchyImage& c, const quad::DiskRule& rule);

/// (2π Σ k² |b_k|² σ_{k-1})^{1/2}.
ImproperValue dirichlet_norm_series(const CauchyImage& c);

/// Rule used by the Dirichlet quadrature for a window of K terms.
quad::DiskRule dirichlet_rule(int window);

/// -Σ_{k=0}^{deg} c_{-(k+1)} a_k. Requires window >= deg(h1) + 1.
cplx pairing_functional(const BoundaryFunction& gamma_boundary, const TaylorSeries& h1);

struct CsBoundReport {
    double pairing = 0.0;  // |𝔽(h)|
    double rho = 0.0;
    double h_norm = 0.0;
    double bound = 0.0;    // ρ·‖h‖/π
    bool pass = false;
};

/// |𝔽(h)| <= (1/π) ρ(γ∘φ) ‖h‖ + 1e-10.
CsBoundReport check_cs_bound(const BoundaryFunction& gamma_boundary, const TaylorSeries& h1,
                             const MomentSequence& moments);

/// 2k² σ_{k-1} ω_{k-1} = 4 M_{k-1}, k >= 1.
ImproperValue per_term_ratio(const MomentSequence& moments, int k);

}  // namespace wcauchy
