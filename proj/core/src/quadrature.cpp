#include "wcauchy/quadrature.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "wcauchy/weights.hpp"

namespace wcauchy::quad {

namespace {

GaussLegendre build_gauss_legendre(int n) {
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 1.0 / ((1.0 - x * x) * dp * dp);  // half of 2/((1-x²)P'²)
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n == 1) {
        rule.nodes[0] = 0.5;
        rule.weights[0] = 1.0;
    }
    return rule;
}

double polar_mean_derivative_sq(const ConformalMap& map, double r) {
    // ∫₀^{2π} |φ'(r e^{iθ})|² dθ in closed form.
    switch (map.kind()) {
        case ConformalMap::Kind::identity:
            return 2.0 * M_PI;
        case ConformalMap::Kind::polynomial: {
            const auto c = map.coefficients();
            double s = 0.0, rp = 1.0;
            for (std::size_t m = 0; m < c.size(); ++m) {
                s += std::norm(static_cast<double>(m + 1) * c[m]) * rp;
                rp *= r * r;
            }
            return 2.0 * M_PI * s;
        }
        case ConformalMap::Kind::moebius: {
            const double a2 = std::norm(map.moebius_center());
            const double l2 = std::norm(map.moebius_scale());
            const double x = a2 * r * r;
            return 2.0 * M_PI * l2 * (1.0 - a2) * (1.0 - a2) * (1.0 + x) / ((1.0 - x) * (1.0 - x) * (1.0 - x));
        }
    }
    return 0.0;
}

}  // namespace

const GaussLegendre& gauss_legendre(int order) {
    if (order < 1) throw PreconditionError("gauss_legendre: order must be >= 1");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendre>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[order];
    if (!slot) slot = std::make_unique<GaussLegendre>(build_gauss_legendre(order));
    return *slot;
}

RadialRule RadialRule::dyadic(int order, int depth) { return graded(order, depth, depth); }

RadialRule RadialRule::graded(int order, int inner_depth, int outer_depth) {
    return graded(order, inner_depth, outer_depth, {}, 0.0);
}

RadialRule RadialRule::graded(int order, int inner_depth, int outer_depth,
                              std::span<const double> t_breaks, double t_min) {
    if (order < 1 || inner_depth < 0 || outer_depth < 3 || outer_depth > 1000)
        throw PreconditionError("RadialRule: bad order or depth");
    // Edges are kept as r below 1/2 and as t = 1 - r above, so nothing
    // near the unit circle is formed by cancellation.
    std::vector<Edge> edges;
    edges.push_back({0.0, 1.0});
    for (int j = inner_depth; j > 3; --j) edges.push_back({std::ldexp(1.0, -j), 1.0 - std::ldexp(1.0, -j)});
    for (int i = 2; i <= 14; ++i) {
        const double r = i / 16.0;
        edges.push_back({r, 1.0 - r});
    }
    for (int j = 4; j <= outer_depth; ++j) edges.push_back({1.0 - std::ldexp(1.0, -j), std::ldexp(1.0, -j)});
    edges.push_back({1.0, 0.0});

    for (double t : t_breaks) {
        if (!(t > 0.0 && t <= 1.0)) throw PreconditionError("RadialRule: t break outside (0,1]");
        if (t < 1.0) edges.push_back({1.0 - t, t});
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.t > b.t;  // increasing r
    });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const Edge& a, const Edge& b) { return a.t == b.t; }),
                edges.end());
    if (t_min > 0.0) {
        std::vector<Edge> kept;
        for (const auto& e : edges)
            if (e.t > t_min) kept.push_back(e);
        kept.push_back({1.0 - t_min, t_min});
        edges = std::move(kept);
    }
    return RadialRule(order, edges);
}

RadialRule::RadialRule(int order, const std::vector<Edge>& edges) : order_(order) {
    const auto& gl = gauss_legendre(order);
    panel_count_ = static_cast<int>(edges.size()) - 1;
    nodes_.reserve(static_cast<std::size_t>(panel_count_) * order);
    for (int p = 0; p < panel_count_; ++p) {
        const Edge lo = edges[p], hi = edges[p + 1];
        const bool by_t = lo.r >= 0.5;
        for (int i = 0; i < order; ++i) {
            RadialNode n{};
            if (by_t) {
                const double h = lo.t - hi.t;
                n.rc = hi.t + h * (1.0 - gl.nodes[i]);
                n.r = 1.0 - n.rc;
                n.weight = h * gl.weights[i];
            } else {
                const double h = hi.r - lo.r;
                n.r = lo.r + h * gl.nodes[i];
                n.rc = 1.0 - n.r;
                n.weight = h * gl.weights[i];
            }
            n.panel = p;
            nodes_.push_back(n);
        }
    }
}

DiskRule::DiskRule(RadialRule radial, int angular) : radial_(std::move(radial)), angular_(angular) {
    if (angular < 8 || angular % 2 != 0) throw PreconditionError("DiskRule: M must be even and >= 8");
    roots_.resize(angular);
    for (int j = 0; j < angular; ++j) roots_[j] = std::polar(1.0, 2.0 * M_PI * j / angular);
}

DiskRule weighted_disk_rule(int degree, int min_angular) {
    int m = std::max({min_angular, 4 * std::max(degree, 0) + 8, 8});
    m += m & 1;
    return DiskRule(RadialRule::graded(16, 4, 60), m);
}

QuadResult<double> annulus_mass(const ConformalMap& map, const WeightSpec& weight, double t_max,
                                const QuadOptions& opt) {
    if (!(t_max > 0.0 && t_max <= 1.0)) throw PreconditionError("annulus_mass: t_max must lie in (0,1]");
    // r = 1 - t_max·s; s small is the singular end at |w| = 1.
    auto integrand = [&](UnitPoint p) {
        const double t = t_max * p.r;
        const double r = (1.0 - t_max) + t_max * p.rc;
        return t_max * r * polar_mean_derivative_sq(map, r) * weight(t);
    };
    return integrate_01(integrand, opt);
}

double tail_mass(const ConformalMap& map, const WeightSpec& weight, int n, const QuadOptions& opt) {
    if (n < 2) throw PreconditionError("tail_mass: n must be >= 2");
    const auto full = annulus_mass(map, weight, 1.0, opt);
    if (full.divergent) throw DivergenceError("tail_mass: weighted area of G diverges");
    if (n == 2) return full.value;
    const auto part = annulus_mass(map, weight, 2.0 / n, opt);
    if (part.divergent) throw DivergenceError("tail_mass: annulus integral diverges");
    return part.value;
}

}  // namespace wcauchy::quad
