// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wcauchy/approx.hpp"
#include "wcauchy/errors.hpp"
#include "wcauchy/random.hpp"
#include "wcauchy/transform.hpp"

using namespace wcauchy;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::shared_ptr<const MomentSequence> moments_of(const WeightSpec& w) {
    return std::make_shared<const MomentSequence>(w);
}

const ConformalMap kPoly = ConformalMap::polynomial({1.0, 0.25});

Outcome isometry() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(1001);
    const WeightSpec ws[] = {WeightSpec::constant(), WeightSpec::power(0.5), WeightSpec::power(-0.5)};
    double worst_series = 0.0, worst_quad = 0.0;
    for (const auto& w : ws) {
        const auto ms = moments_of(w);
        for (int trial = 0; trial < 100; ++trial) {
            const int deg = rng.integer(0, 32);
            const BergmanElement e{random_series(rng, deg), ms, std::nullopt};
            const double g = bergman_norm_series(e);
            const double k = b21_norm_series(cauchy_transform_disk(e));
            const double q = bergman_norm_quadrature(e, quad::weighted_disk_rule(deg));
            worst_series = std::max(worst_series, std::abs(k - g) / g);
            worst_quad = std::max(worst_quad, std::abs(q - g) / g);
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst_series <= 1e-12 && worst_quad <= 1e-8 && secs <= 60.0,
            fmt("300 series; max rel series %.2e (<=1e-12), quadrature %.2e (<=1e-8), %.1fs (<=60s)",
                worst_series, worst_quad, secs)};
}

Outcome closed_form_vs_quadrature() {
    Rng rng(1002);
    const WeightSpec ws[] = {WeightSpec::constant(), WeightSpec::power(0.5), WeightSpec::power(-0.5)};
    const auto id = ConformalMap::identity();
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const BergmanElement e{random_series(rng, 8), moments_of(ws[i % 3]), std::nullopt};
        const cplx zeta = std::polar(rng.uniform(1.1, 3.0), rng.uniform(0.0, 2 * M_PI));
        const cplx closed = cauchy_transform_disk(e).series(zeta);
        const cplx quad = cauchy_transform_quadrature(e, id, zeta);
        worst = std::max(worst, std::abs(quad - closed) / std::abs(closed));
    }
    return {worst <= 1e-6, fmt("20 points, |zeta| in [1.1,3]; max rel error %.2e (<=1e-6)", worst)};
}

Outcome ratio_floor() {
    // Builtins whose inverse moments are finite (pow:a needs a < 1; expexp has none).
    const WeightSpec ws[] = {WeightSpec::constant(), WeightSpec::power(0.5), WeightSpec::power(-0.5),
                             WeightSpec::power(0.9), WeightSpec::power(-0.9)};
    double min_m = INFINITY, const_dev = 0.0;
    bool finite = true;
    for (const auto& w : ws) {
        MomentSequence ms(w);
        for (int k = 0; k <= 200; ++k) {
            const auto m = muckenhoupt_ratio(ms, k);
            if (m.divergent) {
                finite = false;
                continue;
            }
            min_m = std::min(min_m, m.value);
            if (w.family() == WeightFamily::constant) const_dev = std::max(const_dev, std::abs(m.value - 0.25));
        }
    }
    return {finite && min_m >= 0.25 - 1e-9 && const_dev <= 1e-10,
            fmt("const, pow:+-0.5, pow:+-0.9, k<=200; min M_k %.12f (>=0.25-1e-9), const |M_k-1/4| %.2e (<=1e-10)",
                min_m, const_dev)};
}

Outcome ratio_asymptote() {
    double worst_pi = 0.0, worst_oracle = 0.0;
    for (double a : {0.5, -0.5}) {
        MomentSequence ms(WeightSpec::power(a));
        for (int k = 100; k <= 200; ++k) {
            const double m = muckenhoupt_ratio(ms, k).value;
            worst_pi = std::max(worst_pi, std::abs(m - M_PI / 8) / (M_PI / 8));
            worst_oracle = std::max(worst_oracle, std::abs(m - oracle::power_ratio(k, a)) / m);
        }
    }
    return {worst_pi <= 0.05 && worst_oracle <= 1e-9,
            fmt("pow:+-0.5, k in [100,200]; max rel dev from pi/8 %.2e (<=0.05), from Beta oracle %.2e",
                worst_pi, worst_oracle)};
}

Outcome dirichlet_equivalence() {
    Rng rng(1005);
    const WeightSpec ws[] = {WeightSpec::constant(), WeightSpec::power(0.5), WeightSpec::power(-0.5)};
    double worst = 0.0, min_ratio = INFINITY, worst_excess = -INFINITY;
    bool ok = true;
    for (const auto& w : ws) {
        const auto ms = moments_of(w);
        const double c_obs = check_ratio_bound(*ms, 200).sup;
        for (int k = 1; k <= 200; ++k) {
            const double r = per_term_ratio(*ms, k).value;
            min_ratio = std::min(min_ratio, r);
            worst_excess = std::max(worst_excess, r - 4 * c_obs);
        }
    }
    for (int trial = 0; trial < 50; ++trial) {
        const auto ms = moments_of(ws[trial % 3]);
        const int K = rng.integer(1, 16);
        std::vector<cplx> b(K);
        for (auto& x : b) x = rng.complex_in_square();
        const CauchyImage c{LaurentSeries(b), ms};
        const auto s = dirichlet_norm_series(c);
        const auto q = dirichlet_norm_quadrature(c, dirichlet_rule(K));
        if (s.divergent || q.divergent) {
            ok = false;
            continue;
        }
        worst = std::max(worst, std::abs(q.value - s.value) / s.value);
    }
    ok = ok && worst <= 1e-6 && min_ratio >= 1 - 1e-9 && worst_excess <= 1e-9;
    return {ok, fmt("50 windows; max rel series/quadrature %.2e (<=1e-6); per-term ratios min %.9f, "
                    "max minus 4C %.2e",
                    worst, min_ratio, worst_excess)};
}

Outcome converse_pipeline() {
    MomentSequence c(WeightSpec::constant());
    const auto id = ConformalMap::identity();
    double worst_tail = 0.0;
    for (int n : default_n_list()) {
        const double exact = M_PI * (4.0 / n - 4.0 / (double(n) * n));
        worst_tail = std::max(worst_tail, std::abs(quad::tail_mass(id, c.weight(), n) - exact));
    }
    const auto rep = convergence_report(TaylorSeries({1.0}), c, id, CutoffShape::linear_ramp, default_n_list(), 2.0);
    bool bounds = std::abs(rep.c_k - 1.0) <= 1e-10;
    double max_ratio = 0.0;
    for (const auto& row : rep.rows) {
        bounds = bounds && row.sup_dev <= row.bound + 1e-9;
        max_ratio = std::max(max_ratio, row.sup_dev / row.bound);
    }
    return {worst_tail <= 1e-10 && bounds && rep.monotone,
            fmt("n in {2..64}; tail abs err %.2e (<=1e-10), C_K %.12f, max sup/bound %.3f, monotone %s",
                worst_tail, rep.c_k, max_ratio, rep.monotone ? "yes" : "no")};
}

Outcome rho_bound() {
    Rng rng(1007);
    const WeightSpec ws[] = {WeightSpec::constant(), WeightSpec::power(0.5), WeightSpec::power(-0.5),
                             WeightSpec::double_exponential()};
    double worst_rho = -INFINITY, worst_term = -INFINITY;
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        MomentSequence ms(ws[trial % 4]);
        const int deg = rng.integer(0, 8);
        const TaylorSeries h = random_series(rng, deg);
        const ConformalMap& map = trial % 2 ? kPoly : ConformalMap::identity();
        const auto shape = rng.uniform() < 0.5 ? CutoffShape::linear_ramp : CutoffShape::smoothstep;
        const auto rep = rho_bound_check(h, ms, shape, default_n_list(), deg + 1, map);
        ok = ok && rep.pass;
        for (const auto& row : rep.rows) {
            worst_rho = std::max(worst_rho, row.rho_n - rep.g_norm);
            worst_term = std::max(worst_term, row.max_term_excess);
        }
    }
    return {ok && worst_rho <= 1e-9 && worst_term <= 1e-12,
            fmt("50 triples, n<=64; max rho_n-|g| %.2e (<=1e-9), max per-term excess %.2e (<=1e-12)", worst_rho,
                worst_term)};
}

Outcome pairing_bound() {
    Rng rng(1008);
    const WeightSpec ws[] = {WeightSpec::constant(), WeightSpec::power(0.5), WeightSpec::power(-0.5),
                             WeightSpec::power(2.0), WeightSpec::double_exponential()};
    bool ok = true;
    double worst = -INFINITY;
    for (int trial = 0; trial < 100; ++trial) {
        MomentSequence ms(ws[trial % 5]);
        const int deg = rng.integer(0, 12);
        const int K = deg + 1 + rng.integer(0, 6);
        std::vector<cplx> f(2 * K + 1);
        for (auto& x : f) x = rng.complex_in_square();
        const auto rep = check_cs_bound(BoundaryFunction(K, f), random_series(rng, deg), ms);
        ok = ok && rep.pass;
        worst = std::max(worst, rep.pairing - rep.bound);
    }
    MomentSequence c(WeightSpec::constant());
    BoundaryFunction g(1, std::vector<cplx>(3));
    g.set_coefficient(-1, 1.0);
    const auto eq = check_cs_bound(g, TaylorSeries({1.0}), c);
    const double gap = std::abs(eq.pairing - eq.bound);
    return {ok && eq.pass && gap <= 1e-12,
            fmt("100 triples; max |F(h)|-bound %.2e (<=1e-10); equality case gap %.2e (<=1e-12)", worst, gap)};
}

Outcome closure() {
    Rng rng(1009);
    MomentSequence c(WeightSpec::constant());
    const TaylorSeries h = random_series(rng, 8);
    const CutoffFamily cut{CutoffShape::linear_ramp, 8};
    const int K = 12;
    const auto win = gamma_n_boundary_window(h, c, ConformalMap::identity(), cut, K, BoundaryRoute::quadrature);
    const auto b = gamma_n_coeffs(h, c, cut, K);
    double worst = 0.0;
    for (int k = 1; k <= K; ++k) worst = std::max(worst, std::abs(win.coefficient(-k) - b.coefficient(k)));
    return {worst <= 1e-8, fmt("identity, n=8, degree 8, K=%d; max abs coefficient error %.2e (<=1e-8)", K, worst)};
}

Outcome pullback_isometry() {
    Rng rng(1010);
    const WeightSpec ws[] = {WeightSpec::constant(), WeightSpec::power(0.5), WeightSpec::power(-0.5)};
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto& w = ws[trial % 3];
        const int deg = rng.integer(0, 6);
        const TaylorSeries h = random_series(rng, deg);
        const double series = bergman_norm_series({kPoly.pullback(h), moments_of(w), kPoly});
        // Direct integral over G: weight evaluated through the Newton inverse ψ.
        const int pb = 2 * deg + 1;
        const quad::DiskRule rule(quad::RadialRule::graded(16, 4, 48), 4 * pb + 8 + (4 * pb + 8) % 2);
        const double direct = std::sqrt(quad::integrate_domain(
            [&](cplx z, const quad::DiskNode&) {
                // 1 - |ψ(z)| is only resolvable to about 1e-16 from z; the
                // innermost graded panel (t < 2^-48) carries under 1e-7 of the mass.
                const double t = std::max(1.0 - std::abs(kPoly.inverse(z)), 0x1p-50);
                return std::norm(h.evaluate_unchecked(z)) * w(t);
            },
            kPoly, rule));
        worst = std::max(worst, std::abs(direct - series) / series);
    }
    return {worst <= 1e-6, fmt("poly:1,0.25, 20 series; max rel series vs 2D quadrature %.2e (<=1e-6)", worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"isometry", isometry},
        {"closed form vs kernel quadrature", closed_form_vs_quadrature},
        {"lower bound M_k >= 1/4", ratio_floor},
        {"M_k asymptote pi/8", ratio_asymptote},
        {"Dirichlet norm equivalence", dirichlet_equivalence},
        {"converse pipeline tail bound", converse_pipeline},
        {"uniform rho bound", rho_bound},
        {"pairing bound", pairing_bound},
        {"boundary closure", closure},
        {"pullback isometry", pullback_isometry},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
