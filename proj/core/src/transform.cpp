#include "wcauchy/transform.hpp"

#include <algorithm>
#include <cmath>

#include "kernel.hpp"
#include "wcauchy/errors.hpp"

namespace wcauchy {

namespace detail {

double boundary_derivative_max(const ConformalMap& map) {
    double m = 0.0;
    constexpr int samples = 1024;
    for (int j = 0; j < samples; ++j)
        m = std::max(m, std::abs(map.derivative(std::polar(1.0, 2.0 * M_PI * j / samples))));
    return m;
}

int kernel_angular_count(const ConformalMap& map, double dist, double r_max, int extra) {
    if (!(dist > 0.0)) throw PreconditionError("kernel_angular_count: distance must be positive");
    const double q = r_max / (r_max + dist / boundary_derivative_max(map));
    const double needed = std::ceil(36.0 / -std::log(q));
    int m = static_cast<int>(std::min(needed, 16384.0)) + extra;
    m = std::clamp(m, 16, 16384);
    return m + (m & 1);
}

cplx kernel_integral(const TaylorSeries& h1, const ConformalMap& map,
                     const std::function<double(double)>& density, cplx zeta,
                     const quad::DiskRule& rule) {
    const cplx total = quad::integrate_disk(
        [&](const quad::DiskNode& p) -> cplx {
            const double d = density(p.rc);
            if (d == 0.0) return {};
            return std::conj(h1.evaluate_unchecked(p.w)) * map.derivative(p.w) * d /
                   (map.forward(p.w) - zeta);
        },
        rule);
    return total / M_PI;
}

}  // namespace detail

namespace {

const MomentSequence& moments_of(const std::shared_ptr<const MomentSequence>& m) {
    if (!m) throw PreconditionError("element carries no moment sequence");
    return *m;
}

}  // namespace

double bergman_norm_series(const BergmanElement& e) {
    const auto& ms = moments_of(e.moments);
    double s = 0.0;
    for (int k = 0; k <= e.series.degree(); ++k) {
        const double a = std::norm(e.series[k]);
        if (a != 0.0) s += a * ms.omega(k);
    }
    return std::sqrt(M_PI * s);
}

double bergman_norm_quadrature(const BergmanElement& e, const quad::DiskRule& rule) {
    const auto& ms = moments_of(e.moments);
    const int deg = std::max(e.series.degree(), 0);
    if (rule.angular() < 4 * deg + 8)
        throw PreconditionError("bergman_norm_quadrature: need M >= 4*deg + 8");
    const auto& w = ms.weight();
    const double s = quad::integrate_disk(
        [&](const quad::DiskNode& p) { return std::norm(e.series.evaluate_unchecked(p.w)) * w(p.rc); },
        rule);
    return std::sqrt(std::max(s, 0.0));
}

CauchyImage cauchy_transform_disk(const BergmanElement& e) {
    const auto& ms = moments_of(e.moments);
    const int deg = e.series.degree();
    std::vector<cplx> b(std::max(deg + 1, 0));
    for (int k = 1; k <= deg + 1; ++k) {
        const cplx a = e.series[k - 1];
        if (a != cplx{}) b[k - 1] = -std::conj(a) * ms.omega(k - 1);
    }
    return {LaurentSeries(std::move(b)), e.moments};
}

cplx cauchy_transform_quadrature(const BergmanElement& e, const ConformalMap& map, cplx zeta,
                                 const CauchyQuadOptions& options) {
    const auto& ms = moments_of(e.moments);
    const double dist = map.signed_distance(zeta);
    if (dist < options.standoff)
        throw StandoffError("cauchy_transform_quadrature: ζ too close to the closed domain", dist,
                            options.standoff);
    const int extra = 2 * (std::max(e.series.degree(), 0) + map.degree()) + 8;
    const int m = options.angular > 0 ? options.angular : detail::kernel_angular_count(map, dist, 1.0, extra);
    const quad::DiskRule rule(quad::RadialRule::graded(16, options.inner_depth, options.outer_depth),
                              m + (m & 1));
    const auto& w = ms.weight();
    return detail::kernel_integral(e.series, map, [&](double t) { return w(t); }, zeta, rule);
}

cplx cauchy_transform_expansion(const BergmanElement& e, const ConformalMap& map, cplx zeta) {
    const auto& ms = moments_of(e.moments);
    const int deg = e.series.degree();
    if (deg < 0) return {};
    const auto c = map.kernel_taylor(zeta, deg);
    quad::CompensatedSum<cplx> sum;
    for (int j = 0; j <= deg; ++j) {
        const cplx a = e.series[j];
        if (a != cplx{}) sum.add(std::conj(a) * ms.omega(j) * c[j]);
    }
    return sum.value();
}

double b21_norm_series(const CauchyImage& c) {
    const auto& ms = moments_of(c.moments);
    double s = 0.0;
    for (std::size_t k = 1; k <= c.series.size(); ++k) {
        const double b = std::norm(c.series.coefficient(k));
        if (b != 0.0) s += b / ms.omega(static_cast<int>(k) - 1);
    }
    return std::sqrt(M_PI * s);
}

quad::DiskRule dirichlet_rule(int window) {
    int m = std::max(16, 4 * std::max(window, 0) + 8);
    return quad::DiskRule(quad::RadialRule::graded(16, 4, 60), m + (m & 1));
}

ImproperValue dirichlet_norm_series(const CauchyImage& c) {
    const auto& ms = moments_of(c.moments);
    double s = 0.0;
    for (std::size_t k = 1; k <= c.series.size(); ++k) {
        const double b = std::norm(c.series.coefficient(k));
        if (b == 0.0) continue;
        const auto sig = ms.sigma(static_cast<int>(k) - 1);
        if (sig.divergent) return ImproperValue::diverged();
        s += static_cast<double>(k * k) * b * sig.value;
    }
    return ImproperValue::finite(std::sqrt(2.0 * M_PI * s));
}

ImproperValue dirichlet_norm_quadrature(const CauchyImage& c, const quad::DiskRule& rule) {
    const auto& ms = moments_of(c.moments);
    for (std::size_t k = 1; k <= c.series.size(); ++k)
        if (c.series.coefficient(k) != cplx{} && ms.sigma(static_cast<int>(k) - 1).divergent)
            return ImproperValue::diverged();
    if (rule.angular() < 2 * static_cast<int>(c.series.size()) + 4)
        throw PreconditionError("dirichlet_norm_quadrature: angular resolution too small for the window");
    const LaurentSeries d = derivative_laurent(c.series);
    const auto& w = ms.weight();
    const double s = quad::integrate_exterior(
        [&](const quad::ExteriorNode& p) {
            return std::norm(d.evaluate_unchecked(p.zeta)) * std::exp(-w.log_value(p.pre.rc));
        },
        rule);
    return ImproperValue::finite(std::sqrt(std::max(s, 0.0)));
}

cplx pairing_functional(const BoundaryFunction& gamma_boundary, const TaylorSeries& h1) {
    const int deg = h1.degree();
    if (gamma_boundary.window() < deg + 1)
        throw PreconditionError("pairing_functional: window must be >= deg(h1) + 1");
    quad::CompensatedSum<cplx> sum;
    for (int k = 0; k <= deg; ++k) sum.add(gamma_boundary.coefficient(-(k + 1)) * h1[k]);
    return -sum.value();
}

CsBoundReport check_cs_bound(const BoundaryFunction& gamma_boundary, const TaylorSeries& h1,
                             const MomentSequence& moments) {
    CsBoundReport rep;
    rep.pairing = std::abs(pairing_functional(gamma_boundary, h1));
    rep.rho = rho(gamma_boundary, moments);
    double s = 0.0;
    for (int k = 0; k <= h1.degree(); ++k) {
        const double a = std::norm(h1[k]);
        if (a != 0.0) s += a * moments.omega(k);
    }
    rep.h_norm = std::sqrt(M_PI * s);
    rep.bound = rep.rho * rep.h_norm / M_PI;
    rep.pass = rep.pairing <= rep.bound + 1e-10;
    return rep;
}

ImproperValue per_term_ratio(const MomentSequence& moments, int k) {
    if (k < 1) throw PreconditionError("per_term_ratio: k must be >= 1");
    const auto sig = moments.sigma(k - 1);
    if (sig.divergent) return sig;
    return ImproperValue::finite(2.0 * k * k * sig.value * moments.omega(k - 1));
}

}  // namespace wcauchy
