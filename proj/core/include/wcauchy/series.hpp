#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace wcauchy {

using cplx = std::complex<double>;

class MomentSequence;

/// Polynomial Σ_{k=0}^{N} a_k z^k on the closed unit disk.
class TaylorSeries {
public:
    TaylorSeries() = default;
    explicit TaylorSeries(std::vector<cplx> coefficients);

    /// Degree after trimming trailing exact zeros; -1 for the zero series.
    int degree() const;
    std::size_t size() const { return coeffs_.size(); }
    std::span<const cplx> coefficients() const { return coeffs_; }
    /// a_k, or 0 past the stored range.
    cplx operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }

    TaylorSeries trimmed() const;

    /// Horner evaluation; requires |z| <= 1 + 1e-12.
    cplx operator()(cplx z) const;
    /// Horner evaluation without the disk check.
    cplx evaluate_unchecked(cplx z) const;

    friend TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b);
    friend TaylorSeries operator*(cplx s, const TaylorSeries& a);
    friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b);
    friend bool operator==(const TaylorSeries& a, const TaylorSeries& b);

private:
    std::vector<cplx> coeffs_;
};

/// Σ_{k=1}^{M} b_k ζ^{-k}, analytic off the closed disk and zero at ∞.
class LaurentSeries {
public:
    /// Default threshold for evaluation: |ζ| >= 1 + kEvalStandoff.
    static constexpr double kEvalStandoff = 1e-6;

    LaurentSeries() = default;
    /// coefficients[0] is b_1.
    explicit LaurentSeries(std::vector<cplx> coefficients);

    std::size_t size() const { return coeffs_.size(); }
    std::span<const cplx> coefficients() const { return coeffs_; }
    /// b_k for k >= 1, zero past the stored range.
    cplx coefficient(std::size_t k) const;

    /// Horner in 1/ζ. Throws DomainError when |ζ| < 1 + standoff.
    cplx operator()(cplx zeta, double standoff = kEvalStandoff) const;
    /// Horner in 1/ζ with no region check.
    cplx evaluate_unchecked(cplx zeta) const;

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

private:
    std::vector<cplx> coeffs_;
};

/// d/dζ Σ b_k ζ^{-k} = Σ -k b_k ζ^{-k-1}.
LaurentSeries derivative_laurent(const LaurentSeries& s);

/// Fourier window {f_k : |k| <= K} of a function on the unit circle.
class BoundaryFunction {
public:
    BoundaryFunction() = default;
    /// coefficients has size 2K+1, coefficients[k + K] = f_k.
    BoundaryFunction(int window, std::vector<cplx> coefficients, int sample_count = 0);

    int window() const { return window_; }
    int sample_count() const { return samples_; }
    /// f_k for |k| <= K, zero outside the window.
    cplx coefficient(int k) const;
    void set_coefficient(int k, cplx value);
    std::span<const cplx> coefficients() const { return coeffs_; }

    /// Boundary function whose negative coefficients are f_{-k} = b_k.
    static BoundaryFunction from_laurent(const LaurentSeries& s, int window);
    /// Laurent series with b_k = f_{-k}, k = 1..K.
    LaurentSeries negative_part() const;

private:
    int window_ = 0;
    int samples_ = 0;
    std::vector<cplx> coeffs_;
};

/// f_k = (1/N) Σ_j samples_j e^{-ikθ_j}, θ_j = 2πj/N, for |k| <= K.
/// Requires N >= 4K + 4.
BoundaryFunction fourier_coeffs(std::span<const cplx> samples, int window);

/// ρ(f) = (π Σ_{k=1}^{K} |f_{-k}|² / ω_{k-1})^{1/2}.
double rho(const BoundaryFunction& f, const MomentSequence& moments);

namespace io {

/// JSON array of [re, im] pairs.
std::string to_json(std::span<const cplx> coefficients);
std::vector<cplx> from_json(const std::string& text);

/// CSV with header `k,re,im`, one row per k = -K..K.
std::string fourier_csv(const BoundaryFunction& f);

}  // namespace io

}  // namespace wcauchy
