#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "wcauchy/conformal.hpp"
#include "wcauchy/errors.hpp"

namespace wcauchy {

class WeightSpec;

namespace quad {

using cplx = std::complex<double>;

/// Gauss-Legendre rule mapped to [0,1]; weights sum to 1.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule of the given order (order >= 1). Thread-safe.
const GaussLegendre& gauss_legendre(int order);

/// A point of [0,1] carried together with its complement. Near either end
/// the smaller of the two is computed directly, so `rc` keeps full relative
/// precision as r -> 1 (that is where every weight ω(1 - r) is evaluated).
struct UnitPoint {
    double r;
    double rc;
};

template <class T>
struct QuadResult {
    T value{};
    double error = 0.0;
    bool divergent = false;
};

struct QuadOptions {
    double rel_tol = 1e-10;
    double abs_floor = 1e-300;
    int panel_order = 16;
    int max_bisections = 48;
    int max_dyadic_depth = 1000;
    int min_dyadic_depth = 6;
    // divergence classification
    double divergence_ceiling = 1e12;
    double stall_ratio = 1.0 - 1e-6;
    int stall_streak = 4;
};

/// Neumaier-compensated sum; summation order is the call order.
template <class T>
class CompensatedSum {
public:
    void add(T x) {
        if constexpr (std::is_same_v<T, cplx>) {
            re_.add(x.real());
            im_.add(x.imag());
        } else {
            const T t = sum_ + x;
            if (std::abs(sum_) >= std::abs(x))
                comp_ += (sum_ - t) + x;
            else
                comp_ += (x - t) + sum_;
            sum_ = t;
        }
    }

    T value() const {
        if constexpr (std::is_same_v<T, cplx>)
            return {re_.value(), im_.value()};
        else
            return sum_ + comp_;
    }

private:
    struct Empty {};
    T sum_{};
    T comp_{};
    std::conditional_t<std::is_same_v<T, cplx>, CompensatedSum<double>, Empty> re_{};
    std::conditional_t<std::is_same_v<T, cplx>, CompensatedSum<double>, Empty> im_{};
};

namespace detail {

template <class T>
bool is_finite(const T& v) {
    if constexpr (std::is_same_v<T, cplx>)
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    else
        return std::isfinite(v);
}

template <class T, class G>
T fixed_panel(G& g, double a, double b, const GaussLegendre& rule) {
    const double h = b - a;
    T acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * g(a + h * rule.nodes[i]);
    return acc * h;
}

struct PanelOutcome {
    bool exhausted = false;
};

/// Bisection-adaptive Gauss-Legendre on [a,b] to absolute tolerance `tol`.
template <class T, class G>
QuadResult<T> adaptive_panel(G& g, double a, double b, double tol, const QuadOptions& opt,
                             PanelOutcome* outcome = nullptr) {
    const auto& rule = gauss_legendre(opt.panel_order);
    struct Item {
        double a, b;
        T whole;
        double tol;
        int depth;
    };
    std::vector<Item> stack;
    stack.push_back({a, b, fixed_panel<T>(g, a, b, rule), tol, 0});
    QuadResult<T> out;
    CompensatedSum<T> sum;
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        const double m = 0.5 * (it.a + it.b);
        const T left = fixed_panel<T>(g, it.a, m, rule);
        const T right = fixed_panel<T>(g, m, it.b, rule);
        const double diff = std::abs(left + right - it.whole);
        if (!is_finite(left + right)) {
            sum.add(left + right);
            out.error = std::numeric_limits<double>::infinity();
            continue;
        }
        const bool too_deep = it.depth >= opt.max_bisections || m <= it.a || m >= it.b;
        if (diff <= it.tol || too_deep) {
            if (too_deep && diff > it.tol && outcome) outcome->exhausted = true;
            sum.add(left + right);
            out.error += diff;
        } else {
            stack.push_back({m, it.b, right, 0.5 * it.tol, it.depth + 1});
            stack.push_back({it.a, m, left, 0.5 * it.tol, it.depth + 1});
        }
    }
    out.value = sum.value();
    return out;
}

template <class T>
struct SweepOutcome {
    T value{};
    double error = 0.0;
    bool divergent = false;
    bool exhausted = false;
};

/// Integrates g(s) over (0, 1/2] using dyadic panels [2^{-j-1}, 2^{-j}]
/// marching toward s = 0, with geometric extrapolation of the remainder.
template <class T, class G>
SweepOutcome<T> endpoint_sweep(G& g, double abs_tol, double scale, const QuadOptions& opt) {
    SweepOutcome<T> out;
    CompensatedSum<T> partial;
    T prev_d{};
    T prev_total{};
    int stall = 0;
    int settled = 0;
    double prev_ratio = -1.0;
    double err = 0.0;
    double hi = 0.5;
    for (int j = 1; j <= opt.max_dyadic_depth; ++j) {
        const double lo = 0.5 * hi;
        if (lo <= 0.0) break;
        PanelOutcome po;
        const auto panel = adaptive_panel<T>(g, lo, hi, abs_tol, opt, &po);
        out.exhausted = out.exhausted || po.exhausted;
        hi = lo;
        const T d = panel.value;
        err += panel.error;
        partial.add(d);
        const T sum = partial.value();
        if (!is_finite(sum) || std::abs(sum) > opt.divergence_ceiling) {
            out.divergent = true;
            out.value = sum;
            return out;
        }

        const double ad = std::abs(d);
        const double ap = std::abs(prev_d);
        T tail{};
        if (j >= 2 && ap > 0.0) {
            // Growth only counts once the ratio has settled: integrands
            // such as r^{2k+1} t^{-1/2} grow over the first log2(k) panels.
            const double ratio = ad / ap;
            const bool settled_ratio = std::abs(ratio - prev_ratio) <= 1e-3 * ratio;
            prev_ratio = ratio;
            if (ratio >= opt.stall_ratio && settled_ratio) {
                if (++stall >= opt.stall_streak) {
                    out.divergent = true;
                    out.value = sum;
                    return out;
                }
            } else {
                stall = 0;
            }
            const T q = d / prev_d;
            if (std::abs(q) < 1.0) tail = d * q / (T(1) - q);
        } else {
            stall = 0;
        }
        const T total = sum + tail;
        const double step = std::abs(total - prev_total);
        const double target = 0.1 * opt.rel_tol * std::max(std::abs(total), scale) + opt.abs_floor;
        if (j >= opt.min_dyadic_depth && ((ad == 0.0 && ap == 0.0) || step <= target)) {
            if (++settled >= 2) {
                out.value = total;
                out.error = err + step + 0.1 * std::abs(tail);
                return out;
            }
        } else {
            settled = 0;
        }
        prev_d = d;
        prev_total = total;
    }
    out.value = prev_total;
    out.error = std::numeric_limits<double>::infinity();
    out.exhausted = true;
    return out;
}

template <class T, class G>
double rough_scale(G& g, int depth, const GaussLegendre& rule) {
    double s = 0.0;
    double hi = 0.5;
    for (int j = 1; j <= depth; ++j) {
        const double lo = 0.5 * hi;
        s += std::abs(fixed_panel<T>(g, lo, hi, rule));
        hi = lo;
    }
    return s;
}

}  // namespace detail

/// Adaptive integration over (0,1) for integrands that may be singular (but
/// integrable) at either endpoint. The integrand receives a UnitPoint.
///
/// Each half is covered by dyadic panels marching toward its endpoint; the
/// unresolved remainder is extrapolated geometrically from the ratio of
/// successive panel contributions. The integral is classified divergent when
/// it produces non-finite values, when the partial sum exceeds
/// `divergence_ceiling`, or when the panel contributions stop decaying
/// (ratio >= stall_ratio, with the ratio itself settled) for `stall_streak`
/// consecutive refinements.
/// Budget exhaustion throws AccuracyError.
template <class F>
auto integrate_01(F&& f, const QuadOptions& opt = {})
    -> QuadResult<std::decay_t<decltype(f(UnitPoint{}))>> {
    using T = std::decay_t<decltype(f(UnitPoint{}))>;
    auto near_zero = [&](double s) { return f(UnitPoint{s, 1.0 - s}); };
    auto near_one = [&](double s) { return f(UnitPoint{1.0 - s, s}); };

    const auto& rule = gauss_legendre(opt.panel_order);
    const double scale =
        detail::rough_scale<T>(near_zero, 60, rule) + detail::rough_scale<T>(near_one, 60, rule);
    QuadResult<T> out;
    if (!std::isfinite(scale) || scale > opt.divergence_ceiling) {
        out.divergent = true;
        out.value = T(std::numeric_limits<double>::infinity());
        return out;
    }
    const double abs_tol = std::max(0.01 * opt.rel_tol * scale, opt.abs_floor);

    const auto left = detail::endpoint_sweep<T>(near_zero, abs_tol, scale, opt);
    const auto right = detail::endpoint_sweep<T>(near_one, abs_tol, scale, opt);
    out.value = left.value + right.value;
    out.error = left.error + right.error;
    if (left.divergent || right.divergent) {
        out.divergent = true;
        return out;
    }
    if (left.exhausted || right.exhausted) {
        throw AccuracyError("integrate_01: tolerance not reached within budget",
                            std::abs(out.value), out.error);
    }
    return out;
}

/// Adaptive integration of an integrand smooth on [r_lo, r_hi] ⊂ [0,1].
/// Points with r >= 1/2 are generated from their complement so that `rc`
/// stays exact near r = 1.
template <class F>
auto integrate_range(F&& f, double r_lo, double r_hi, const QuadOptions& opt = {})
    -> QuadResult<std::decay_t<decltype(f(UnitPoint{}))>> {
    using T = std::decay_t<decltype(f(UnitPoint{}))>;
    QuadResult<T> out;
    if (!(r_hi > r_lo)) return out;
    auto by_r = [&](double r) { return f(UnitPoint{r, 1.0 - r}); };
    auto by_t = [&](double t) { return f(UnitPoint{1.0 - t, t}); };
    const auto& rule = gauss_legendre(opt.panel_order);

    struct Piece {
        bool from_t;
        double a, b;
    };
    std::vector<Piece> pieces;
    if (r_hi <= 0.5) {
        pieces.push_back({false, r_lo, r_hi});
    } else if (r_lo >= 0.5) {
        pieces.push_back({true, 1.0 - r_hi, 1.0 - r_lo});
    } else {
        pieces.push_back({false, r_lo, 0.5});
        pieces.push_back({true, 1.0 - r_hi, 0.5});
    }
    double scale = 0.0;
    for (const auto& p : pieces) {
        const double h = (p.b - p.a) / 8.0;
        for (int i = 0; i < 8; ++i) {
            const double a = p.a + i * h;
            scale += p.from_t ? std::abs(detail::fixed_panel<T>(by_t, a, a + h, rule))
                              : std::abs(detail::fixed_panel<T>(by_r, a, a + h, rule));
        }
    }
    const double abs_tol = std::max(0.1 * opt.rel_tol * scale, opt.abs_floor);
    detail::PanelOutcome po;
    CompensatedSum<T> sum;
    for (const auto& p : pieces) {
        const auto part = p.from_t ? detail::adaptive_panel<T>(by_t, p.a, p.b, abs_tol, opt, &po)
                                   : detail::adaptive_panel<T>(by_r, p.a, p.b, abs_tol, opt, &po);
        sum.add(part.value);
        out.error += part.error;
    }
    out.value = sum.value();
    if (!detail::is_finite(out.value)) {
        out.divergent = true;
        return out;
    }
    if (po.exhausted)
        throw AccuracyError("integrate_range: bisection budget exhausted", std::abs(out.value),
                            out.error);
    return out;
}

// ---------------------------------------------------------------------------
// Tensor-product rules on the disk.

struct RadialNode {
    double r;
    double rc;
    double weight;
    int panel;
};

/// Gauss-Legendre panels on (0,1), refined dyadically toward both ends.
class RadialRule {
public:
    /// Panel edges r = 2^{-inner_depth}, ..., 1/2 toward r = 0 and
    /// 1 - r = 2^{-1}, ..., 2^{-outer_depth} toward r = 1.
    static RadialRule dyadic(int order = 16, int depth = 12);
    static RadialRule graded(int order, int inner_depth, int outer_depth);

    /// Graded rule with additional edges at the given distances t = 1 - r
    /// from the unit circle, restricted to t >= t_min (t_min = 0 keeps all).
    static RadialRule graded(int order, int inner_depth, int outer_depth,
                             std::span<const double> t_breaks, double t_min);

    std::span<const RadialNode> nodes() const { return nodes_; }
    int order() const { return order_; }
    int panel_count() const { return panel_count_; }
    int innermost_panel() const { return 0; }

private:
    struct Edge {
        double r;
        double t;
    };
    RadialRule(int order, const std::vector<Edge>& edges);

    int order_ = 0;
    int panel_count_ = 0;
    std::vector<RadialNode> nodes_;
};

struct DiskNode {
    cplx w;
    double r;
    double rc;
};

/// Radial rule times an M-point trapezoid rule in the angle.
class DiskRule {
public:
    DiskRule(RadialRule radial, int angular);

    const RadialRule& radial() const { return radial_; }
    int angular() const { return angular_; }
    std::span<const cplx> unit_roots() const { return roots_; }

private:
    RadialRule radial_;
    int angular_;
    std::vector<cplx> roots_;
};

/// Default rule for weighted integrals of a degree-`degree` polynomial
/// density: graded toward |w| = 1 deeply enough for |ln ω| power-type
/// endpoint behaviour, angular count >= 4·degree + 8.
DiskRule weighted_disk_rule(int degree, int min_angular = 16);

/// ∬_𝔻 F dm via Σ_i Σ_j w_i (2π/M) r_i F(r_i e^{iθ_j}).
template <class F>
auto integrate_disk(F&& f, const DiskRule& rule) {
    using T = std::decay_t<decltype(f(DiskNode{}))>;
    const double dtheta = 2.0 * M_PI / rule.angular();
    CompensatedSum<T> total;
    for (const auto& rn : rule.radial().nodes()) {
        CompensatedSum<T> ring;
        for (const auto& u : rule.unit_roots()) ring.add(f(DiskNode{rn.r * u, rn.r, rn.rc}));
        total.add(ring.value() * (rn.weight * rn.r * dtheta));
    }
    return total.value();
}

struct ExteriorNode {
    cplx zeta;
    DiskNode pre;  // w = 1/ζ, so rc = 1 - 1/|ζ|
};

/// ∬_{|ζ|>1} F dm via ζ = 1/w: ∬_{0<|w|<1} F(1/w) |w|^{-4} dm(w).
/// Throws AccuracyError when the innermost radial panel (around ζ = ∞)
/// contributes more than twice its outer neighbour, i.e. F decays too slowly.
template <class F>
auto integrate_exterior(F&& f, const DiskRule& rule) {
    using T = std::decay_t<decltype(f(ExteriorNode{}))>;
    const double dtheta = 2.0 * M_PI / rule.angular();
    CompensatedSum<T> total;
    std::vector<double> per_panel(rule.radial().panel_count(), 0.0);
    std::vector<T> panel_sum(rule.radial().panel_count(), T{});
    for (const auto& rn : rule.radial().nodes()) {
        CompensatedSum<T> ring;
        const double r4 = 1.0 / (rn.r * rn.r * rn.r * rn.r);
        for (const auto& u : rule.unit_roots()) {
            const cplx w = rn.r * u;
            ring.add(f(ExteriorNode{1.0 / w, DiskNode{w, rn.r, rn.rc}}) * r4);
        }
        const T contrib = ring.value() * (rn.weight * rn.r * dtheta);
        panel_sum[rn.panel] += contrib;
        total.add(contrib);
    }
    const T value = total.value();
    if (!detail::is_finite(value))
        throw AccuracyError("integrate_exterior: non-finite integrand", 0.0,
                            std::numeric_limits<double>::infinity());
    if (panel_sum.size() >= 2) {
        const double inner = std::abs(panel_sum[0]);
        const double next = std::abs(panel_sum[1]);
        if (inner > 2.0 * next && inner > 1e-14 * std::abs(value))
            throw AccuracyError("integrate_exterior: integrand decays too slowly at infinity",
                                std::abs(value), inner);
    }
    return value;
}

/// ∬_G H dm = ∬_𝔻 H(φ(w)) |φ'(w)|² dm(w). H receives z = φ(w) and the
/// disk node it came from.
template <class H>
auto integrate_domain(H&& h, const ConformalMap& map, const DiskRule& rule) {
    return integrate_disk(
        [&](const DiskNode& p) {
            const cplx d = map.derivative(p.w);
            return h(map.forward(p.w), p) * std::norm(d);
        },
        rule);
}

/// ∬_{t_max ≥ 1-|w|} |φ'(w)|² ω(1-|w|) dm(w), adaptive in the radial
/// variable with endpoint handling at |w| = 1.
QuadResult<double> annulus_mass(const ConformalMap& map, const WeightSpec& weight, double t_max,
                                const QuadOptions& opt = {});

/// ∬_{1-2/n ≤ |z| < 1} |φ'(z)|² ω(1-|z|) dm₂(z). Requires n >= 2 and that
/// the full integral converges; throws DivergenceError otherwise.
double tail_mass(const ConformalMap& map, const WeightSpec& weight, int n,
                 const QuadOptions& opt = {});

}  // namespace quad
}  // namespace wcauchy
