#include "wcauchy/approx.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kernel.hpp"
#include "wcauchy/errors.hpp"
#include "wcauchy/quadrature.hpp"

namespace wcauchy {

namespace {

quad::QuadOptions moment_options(const MomentSequence& ms) {
    quad::QuadOptions opt;
    opt.rel_tol = ms.tolerance();
    return opt;
}

void check_family(const CutoffFamily& c) {
    if (!c.is_unbounded() && c.n < 2) throw PreconditionError("cutoff: n must be >= 2");
}

double g_norm_of(const TaylorSeries& h1, const MomentSequence& ms) {
    double s = 0.0;
    for (int k = 0; k <= h1.degree(); ++k) {
        const double a = std::norm(h1[k]);
        if (a != 0.0) s += a * ms.omega(k);
    }
    return std::sqrt(M_PI * s);
}

/// Σ conj(a_j) m_j c_j(ζ) for a per-index moment m_j.
template <class M>
cplx expansion_sum(const TaylorSeries& h1, const ConformalMap& map, cplx zeta, M&& m) {
    const int deg = h1.degree();
    if (deg < 0) return {};
    const auto c = map.kernel_taylor(zeta, deg);
    quad::CompensatedSum<cplx> sum;
    for (int j = 0; j <= deg; ++j)
        if (h1[j] != cplx{}) sum.add(std::conj(h1[j]) * m(j) * c[j]);
    return sum.value();
}

}  // namespace

double cutoff_eval(const CutoffFamily& c, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("cutoff_eval: t outside [0,1]");
    check_family(c);
    if (c.is_unbounded()) return 1.0;
    const double s = std::clamp(c.n * t - 1.0, 0.0, 1.0);
    if (c.shape == CutoffShape::smoothstep) return s * s * (3.0 - 2.0 * s);
    return s;
}

bool ApproximatingDomain::contains(cplx z) const {
    try {
        return std::abs(map.inverse(z)) < radius();
    } catch (const OutsideDomainError&) {
        return false;
    }
}

bool ApproximatingDomain::check_nesting(int samples) const {
    const ApproximatingDomain next{map, n + 1};
    for (int j = 0; j < samples; ++j) {
        const cplx z = map.forward(std::polar(radius(), 2.0 * M_PI * j / samples));
        cplx w;
        try {
            w = map.inverse(z);
        } catch (const OutsideDomainError&) {
            return false;
        }
        if (!(std::abs(w) < next.radius() && std::abs(w) < 1.0)) return false;
    }
    return true;
}

double cutoff_moment(const MomentSequence& moments, const CutoffFamily& c, int j) {
    check_family(c);
    if (j < 0) throw PreconditionError("cutoff_moment: j must be >= 0");
    if (c.is_unbounded()) return moments.omega(j);
    // 2∫ (1-t)^{2j+1} ω(t) α_n(t) dt over [1/n, 1], split at the kink 2/n.
    // The UnitPoint carries t in `r` and the radius 1 - t in `rc`.
    const auto& w = moments.weight();
    const int e = 2 * j + 1;
    auto f = [&](quad::UnitPoint p) { return 2.0 * std::pow(p.rc, e) * w(p.r) * cutoff_eval(c, p.r); };
    const double t1 = 1.0 / c.n, t2 = 2.0 / c.n;
    const auto opt = moment_options(moments);
    const auto ramp = quad::integrate_range(f, t1, t2, opt);
    const auto plateau = quad::integrate_range(f, t2, 1.0, opt);
    if (ramp.divergent || plateau.divergent) throw DivergenceError("cutoff_moment: non-finite integrand");
    return ramp.value + plateau.value;
}

double cutoff_deficit(const MomentSequence& moments, const CutoffFamily& c, int j) {
    check_family(c);
    if (j < 0) throw PreconditionError("cutoff_deficit: j must be >= 0");
    if (c.is_unbounded()) return 0.0;
    // t = (2/n)s over s ∈ (0,1); the kink t = 1/n sits at s = 1/2.
    const auto& w = moments.weight();
    const int e = 2 * j + 1;
    const double span = 2.0 / c.n;
    auto f = [&](quad::UnitPoint p) {
        const double t = span * p.r;
        const double r = (1.0 - span) + span * p.rc;
        return 2.0 * span * std::pow(r, e) * w(t) * (1.0 - cutoff_eval(c, t));
    };
    const auto res = quad::integrate_01(f, moment_options(moments));
    if (res.divergent) throw DivergenceError("cutoff_deficit: integral diverges");
    return res.value;
}

LaurentSeries gamma_n_coeffs(const TaylorSeries& h1, const MomentSequence& moments,
                             const CutoffFamily& c, int window) {
    if (window < 0) throw PreconditionError("gamma_n_coeffs: negative window");
    const int m = std::min(window, h1.degree() + 1);
    std::vector<cplx> b(std::max(m, 0));
    for (int k = 1; k <= m; ++k) {
        const cplx a = h1[k - 1];
        if (a != cplx{}) b[k - 1] = -std::conj(a) * cutoff_moment(moments, c, k - 1);
    }
    return LaurentSeries(std::move(b));
}

cplx gamma_n_eval(const TaylorSeries& h1, const MomentSequence& moments, const ConformalMap& map,
                  const CutoffFamily& c, cplx zeta, const GammaQuadOptions& options) {
    check_family(c);
    const double r_max = c.is_unbounded() ? 1.0 : 1.0 - 1.0 / c.n;
    const double dist = map.signed_distance(zeta, r_max);
    if (dist < options.standoff || !(dist > 0.0))
        throw StandoffError("gamma_n_eval: ζ too close to the closed approximating domain", dist,
                            options.standoff);
    const int extra = 2 * (std::max(h1.degree(), 0) + map.degree()) + 8;
    int m = options.angular > 0 ? options.angular : detail::kernel_angular_count(map, dist, r_max, extra);
    m += m & 1;
    const auto& w = moments.weight();
    if (c.is_unbounded()) {
        const quad::DiskRule rule(quad::RadialRule::graded(16, options.inner_depth, 60), m);
        return detail::kernel_integral(h1, map, [&](double t) { return w(t); }, zeta, rule);
    }
    const double breaks[] = {1.0 / c.n, 2.0 / c.n};
    const quad::DiskRule rule(
        quad::RadialRule::graded(16, options.inner_depth, 60, breaks, 1.0 / c.n), m);
    return detail::kernel_integral(
        h1, map, [&](double t) { return t <= 1.0 / c.n ? 0.0 : w(t) * cutoff_eval(c, t); }, zeta, rule);
}

cplx gamma_n_expansion(const TaylorSeries& h1, const MomentSequence& moments,
                       const ConformalMap& map, const CutoffFamily& c, cplx zeta) {
    return expansion_sum(h1, map, zeta, [&](int j) { return cutoff_moment(moments, c, j); });
}

CauchyTypeIntegral cauchy_type_integral(std::span<const cplx> samples, cplx zeta, int window,
                                        double standoff) {
    const double dist = std::abs(zeta) - 1.0;
    if (dist < standoff)
        throw StandoffError("cauchy_type_integral: |ζ| below 1 + standoff", dist, standoff);
    const BoundaryFunction f = fourier_coeffs(samples, window);
    // -(1/2πi)∮ f(t)/(t - ζ) dt with t = e^{iθ}, dt = i t dθ.
    const auto n = samples.size();
    quad::CompensatedSum<cplx> sum;
    for (std::size_t j = 0; j < n; ++j) {
        const cplx t = std::polar(1.0, 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n));
        sum.add(samples[j] * t / (t - zeta));
    }
    return {-sum.value() / static_cast<double>(n), f.negative_part()};
}

std::vector<cplx> gamma_n_boundary_samples(const TaylorSeries& h1, const MomentSequence& moments,
                                           const ConformalMap& map, const CutoffFamily& c,
                                           int sample_count, BoundaryRoute route) {
    if (sample_count < 1) throw PreconditionError("gamma_n_boundary_samples: need samples");
    check_family(c);
    std::vector<cplx> out(sample_count);
    if (route == BoundaryRoute::expansion) {
        const int deg = h1.degree();
        std::vector<double> mu(std::max(deg + 1, 0));
        for (int j = 0; j <= deg; ++j)
            if (h1[j] != cplx{}) mu[j] = cutoff_moment(moments, c, j);
        for (int j = 0; j < sample_count; ++j) {
            const cplx z = map.boundary_point(2.0 * M_PI * j / sample_count);
            out[j] = expansion_sum(h1, map, z, [&](int i) { return mu[i]; });
        }
        return out;
    }
    if (c.is_unbounded())
        throw PreconditionError("gamma_n_boundary_samples: quadrature route needs a bounded cutoff");
    GammaQuadOptions opt;
    opt.standoff = 0.0;
    // One angular count for every sample: the smallest distance from ∂G to Ḡ_n.
    double dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 256; ++j)
        dist = std::min(dist, map.signed_distance(map.boundary_point(2.0 * M_PI * j / 256), 1.0 - 1.0 / c.n, 1024));
    opt.angular = detail::kernel_angular_count(map, 0.5 * dist, 1.0 - 1.0 / c.n,
                                               2 * (std::max(h1.degree(), 0) + map.degree()) + 8);
    for (int j = 0; j < sample_count; ++j)
        out[j] = gamma_n_eval(h1, moments, map, c, map.boundary_point(2.0 * M_PI * j / sample_count), opt);
    return out;
}

BoundaryFunction gamma_n_boundary_window(const TaylorSeries& h1, const MomentSequence& moments,
                                         const ConformalMap& map, const CutoffFamily& c,
                                         int window, BoundaryRoute route) {
    int n = 4 * window + 4;
    auto f = fourier_coeffs(gamma_n_boundary_samples(h1, moments, map, c, n, route), window);
    // On the identity map γ_n∘φ has no non-negative frequencies. Otherwise
    // the positive tail aliases into the window, so double N until it settles.
    if (map.kind() == ConformalMap::Kind::identity) return f;
    const int max_samples = route == BoundaryRoute::expansion ? 1 << 16 : 1 << 10;
    while (true) {
        if (2 * n > max_samples)
            throw AccuracyError("gamma_n_boundary_window: aliasing did not settle", 0.0, INFINITY);
        n *= 2;
        const auto samples = gamma_n_boundary_samples(h1, moments, map, c, n, route);
        auto g = fourier_coeffs(samples, window);
        double diff = 0.0, scale = 0.0;
        for (int k = -window; k <= window; ++k)
            diff = std::max(diff, std::abs(g.coefficient(k) - f.coefficient(k)));
        for (const auto& v : samples) scale = std::max(scale, std::abs(v));
        f = std::move(g);
        if (diff <= 1e-14 * scale) return f;
    }
}

ConvergenceReport convergence_report(const TaylorSeries& h1, const MomentSequence& moments,
                                     const ConformalMap& map, CutoffShape shape,
                                     const std::vector<int>& n_list, double radius, int points) {
    if (points < 1) throw PreconditionError("convergence_report: need points");
    ConvergenceReport rep;
    rep.radius = radius;
    std::vector<cplx> zetas(points);
    rep.distance = std::numeric_limits<double>::infinity();
    for (int i = 0; i < points; ++i) {
        zetas[i] = std::polar(radius, 2.0 * M_PI * i / points);
        rep.distance = std::min(rep.distance, map.signed_distance(zetas[i]));
    }
    if (!(rep.distance > 0.0))
        throw PreconditionError("convergence_report: compact circle meets the closed domain");
    rep.c_k = 1.0 / rep.distance;

    const double g_norm = g_norm_of(h1, moments);
    const int deg = h1.degree();
    // Kernel coefficients do not depend on n.
    std::vector<std::vector<cplx>> kernels;
    if (deg >= 0)
        for (const cplx& z : zetas) kernels.push_back(map.kernel_taylor(z, deg));

    rep.pass = true;
    rep.monotone = true;
    double prev = std::numeric_limits<double>::infinity();
    for (int n : n_list) {
        const CutoffFamily c{shape, n};
        check_family(c);
        ConvergenceRow row;
        row.n = n;
        row.g_norm = g_norm;
        std::vector<double> deficit(std::max(deg + 1, 0));
        double rho2 = 0.0;
        for (int j = 0; j <= deg; ++j) {
            if (h1[j] == cplx{}) continue;
            deficit[j] = cutoff_deficit(moments, c, j);
            const double mu = c.is_unbounded() ? moments.omega(j) : cutoff_moment(moments, c, j);
            rho2 += std::norm(h1[j]) * mu * mu / moments.omega(j);
        }
        row.rho_n = std::sqrt(M_PI * rho2);
        for (std::size_t i = 0; i < zetas.size() && deg >= 0; ++i) {
            quad::CompensatedSum<cplx> s;
            for (int j = 0; j <= deg; ++j)
                if (h1[j] != cplx{}) s.add(std::conj(h1[j]) * deficit[j] * kernels[i][j]);
            row.sup_dev = std::max(row.sup_dev, std::abs(s.value()));
        }
        if (!c.is_unbounded()) {
            row.tail_mass = quad::tail_mass(map, moments.weight(), n);
            row.bound = rep.c_k / M_PI * g_norm * std::sqrt(row.tail_mass);
        }
        row.pass = row.sup_dev <= row.bound + 1e-9;
        if (row.sup_dev > prev * (1.0 + 1e-12)) rep.monotone = false;
        prev = row.sup_dev;
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(row);
    }
    rep.pass = rep.pass && rep.monotone;
    return rep;
}

RhoBoundReport rho_bound_check(const TaylorSeries& h1, const MomentSequence& moments,
                               CutoffShape shape, const std::vector<int>& n_list, int window,
                               const ConformalMap& map) {
    RhoBoundReport rep;
    rep.g_norm = g_norm_of(h1, moments);
    const int deg = h1.degree();
    const int k_window = std::max(window, deg + 1);
    rep.pass = true;
    for (int n : n_list) {
        const CutoffFamily c{shape, n};
        RhoBoundRow row;
        row.n = n;
        BoundaryFunction f;
        if (map.kind() == ConformalMap::Kind::identity)
            f = BoundaryFunction::from_laurent(gamma_n_coeffs(h1, moments, c, k_window), k_window);
        else
            f = gamma_n_boundary_window(h1, moments, map, c, k_window, BoundaryRoute::expansion);
        row.rho_n = rho(f, moments);
        row.max_term_excess = -std::numeric_limits<double>::infinity();
        for (int k = 1; k <= k_window; ++k) {
            const double om = moments.omega(k - 1);
            const double excess = std::norm(f.coefficient(-k)) / om - std::norm(h1[k - 1]) * om;
            row.max_term_excess = std::max(row.max_term_excess, excess);
        }
        row.pass = row.rho_n <= rep.g_norm + 1e-9 && row.max_term_excess <= 1e-12;
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(row);
    }
    return rep;
}

MembershipReport witness_membership(const TaylorSeries& h1, const MomentSequence& moments,
                                    const ConformalMap& map, CutoffShape shape,
                                    const std::vector<int>& n_list,
                                    const std::vector<double>& compact_radii, int window) {
    MembershipReport rep;
    const auto integ = check_integrability(moments.weight(), map);
    rep.integrable = !integ.divergent;
    rep.integrability_value = integ.value;
    if (!rep.integrable) {
        rep.reason = "weighted area of G diverges; weight rejected";
        return rep;
    }

    rep.analyticity = true;
    for (int n : n_list) {
        if (n == CutoffFamily::unbounded) continue;
        if (!ApproximatingDomain{map, n}.check_nesting()) rep.analyticity = false;
    }
    for (double r : compact_radii) {
        for (int j = 0; j < 64; ++j)
            if (!(map.signed_distance(std::polar(r, 2.0 * M_PI * j / 64)) > 0.0)) rep.analyticity = false;
    }

    rep.convergence = rep.analyticity;
    if (rep.analyticity) {
        for (double r : compact_radii) {
            rep.convergence_reports.push_back(convergence_report(h1, moments, map, shape, n_list, r));
            rep.convergence = rep.convergence && rep.convergence_reports.back().pass;
        }
    }

    rep.rho_report = rho_bound_check(h1, moments, shape, n_list, window, map);
    rep.rho_bounded = rep.rho_report.pass;

    // Spot check the kernel expansion against 2D quadrature on ∂G for the
    // smallest bounded n, where the quadrature is cheapest.
    int n_check = CutoffFamily::unbounded;
    for (int n : n_list) n_check = std::min(n_check, n);
    rep.routes_agree = true;
    if (n_check != CutoffFamily::unbounded && h1.degree() >= 0) {
        const CutoffFamily c{shape, n_check};
        const auto q = gamma_n_boundary_samples(h1, moments, map, c, 4, BoundaryRoute::quadrature);
        const auto e = gamma_n_boundary_samples(h1, moments, map, c, 4, BoundaryRoute::expansion);
        const double scale = std::max(g_norm_of(h1, moments), 1e-300);
        for (std::size_t i = 0; i < q.size(); ++i)
            rep.route_discrepancy = std::max(rep.route_discrepancy, std::abs(q[i] - e[i]) / scale);
        rep.routes_agree = rep.route_discrepancy <= 1e-7;
    }

    rep.pass = rep.integrable && rep.analyticity && rep.convergence && rep.rho_bounded && rep.routes_agree;
    std::ostringstream why;
    if (!rep.analyticity)
        why << "approximating domains not nested or a compact meets the closed domain";
    else if (!rep.convergence)
        why << "uniform convergence bound violated on a compact";
    else if (!rep.rho_bounded)
        why << "rho bound violated";
    else if (!rep.routes_agree)
        why << "kernel expansion and quadrature disagree (" << rep.route_discrepancy << ")";
    rep.reason = why.str();
    return rep;
}

std::vector<int> default_n_list() { return {2, 4, 8, 16, 32, 64}; }

}  // namespace wcauchy
