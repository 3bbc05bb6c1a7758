#include "wcauchy/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wcauchy/errors.hpp"

namespace wcauchy {

namespace {

constexpr double kEscapeRadius = 1.0 + 1e-9;
constexpr double kDerivativeFloor = 1e-8;

std::string format_complex(cplx c) {
    std::ostringstream os;
    os.precision(17);
    os << c.real();
    if (c.imag() != 0.0) os << (c.imag() < 0 ? "" : "+") << c.imag() << 'i';
    return os.str();
}

double segment_distance(cplx p, cplx a, cplx b) {
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    double s = len2 > 0.0 ? ((p - a) * std::conj(ab)).real() / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(p - (a + s * ab));
}

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool segments_intersect(cplx p1, cplx p2, cplx q1, cplx q2) {
    const double d1 = cross(q2 - q1, p1 - q1);
    const double d2 = cross(q2 - q1, p2 - q1);
    const double d3 = cross(p2 - p1, q1 - p1);
    const double d4 = cross(p2 - p1, q2 - p1);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 &&
           d4 != 0;
}

/// Winding number of a closed polyline about p.
int winding(const std::vector<cplx>& poly, cplx p) {
    double total = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t j = 0; j < n; ++j) {
        const cplx a = poly[j] - p;
        const cplx b = poly[(j + 1) % n] - p;
        total += std::arg(b / a);
    }
    return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

}  // namespace

ConformalMap ConformalMap::identity() {
    ConformalMap m;
    m.kind_ = Kind::identity;
    m.coeffs_ = {cplx{1.0, 0.0}};
    m.dcoeffs_ = {cplx{1.0, 0.0}};
    return m;
}

ConformalMap ConformalMap::polynomial(std::vector<cplx> coefficients) {
    while (coefficients.size() > 1 && coefficients.back() == cplx{}) coefficients.pop_back();
    if (coefficients.empty() || coefficients.front() == cplx{})
        throw PreconditionError("polynomial map: c_1 must be nonzero");
    ConformalMap m;
    m.kind_ = Kind::polynomial;
    m.coeffs_ = std::move(coefficients);
    m.dcoeffs_.resize(m.coeffs_.size());
    for (std::size_t k = 0; k < m.coeffs_.size(); ++k)
        m.dcoeffs_[k] = static_cast<double>(k + 1) * m.coeffs_[k];
    return m;
}

ConformalMap ConformalMap::moebius(cplx a, cplx lambda) {
    if (!(std::abs(a) < 1.0)) throw PreconditionError("moebius map: need |a| < 1");
    if (lambda == cplx{}) throw PreconditionError("moebius map: need λ ≠ 0");
    ConformalMap m;
    m.kind_ = Kind::moebius;
    m.a_ = a;
    m.lambda_ = lambda;
    return m;
}

int ConformalMap::degree() const {
    return kind_ == Kind::polynomial ? static_cast<int>(coeffs_.size()) : 1;
}

std::string ConformalMap::describe() const {
    switch (kind_) {
        case Kind::identity:
            return "identity";
        case Kind::polynomial: {
            std::string s = "poly:";
            for (std::size_t k = 0; k < coeffs_.size(); ++k) {
                if (k) s += ',';
                s += format_complex(coeffs_[k]);
            }
            return s;
        }
        case Kind::moebius:
            if (a_ == cplx{}) return "scale:" + format_complex(lambda_);
            return "moebius:" + format_complex(a_) + ',' + format_complex(lambda_);
    }
    return {};
}

cplx ConformalMap::forward(cplx w) const {
    switch (kind_) {
        case Kind::identity:
            return w;
        case Kind::polynomial: {
            cplx acc{};
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + *it;
            return acc * w;
        }
        case Kind::moebius:
            return lambda_ * (w - a_) / (1.0 - std::conj(a_) * w);
    }
    return {};
}

cplx ConformalMap::derivative(cplx w) const {
    switch (kind_) {
        case Kind::identity:
            return {1.0, 0.0};
        case Kind::polynomial: {
            cplx acc{};
            for (auto it = dcoeffs_.rbegin(); it != dcoeffs_.rend(); ++it) acc = acc * w + *it;
            return acc;
        }
        case Kind::moebius: {
            const cplx den = 1.0 - std::conj(a_) * w;
            return lambda_ * (1.0 - std::norm(a_)) / (den * den);
        }
    }
    return {};
}

cplx ConformalMap::inverse(cplx z) const {
    if (kind_ == Kind::identity) {
        if (std::abs(z) > kEscapeRadius) throw OutsideDomainError("inverse: point outside the disk");
        return z;
    }
    if (kind_ == Kind::moebius) {
        const cplx u = z / lambda_;
        const cplx w = (u + a_) / (1.0 + std::conj(a_) * u);
        if (std::abs(w) > kEscapeRadius) throw OutsideDomainError("inverse: point outside G");
        return w;
    }

    auto newton = [&](cplx w, cplx& out) {
        for (int it = 0; it < newton_max_iter; ++it) {
            const cplx f = forward(w) - z;
            if (std::abs(f) <= newton_tol) {
                const cplx polished = w - f / derivative(w);
                out = std::abs(forward(polished) - z) <= std::abs(f) ? polished : w;
                return std::abs(out) <= kEscapeRadius;
            }
            w -= f / derivative(w);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || std::abs(w) > 2.0)
                return false;
        }
        return false;
    };

    cplx seed = z / derivative(0.0);
    if (std::abs(seed) > 0.95) seed *= 0.95 / std::abs(seed);
    cplx w;
    if (newton(seed, w)) return w;

    // Coarse grid search over the closed disk, then Newton again.
    cplx best{};
    double best_res = std::numeric_limits<double>::infinity();
    constexpr int kRadii = 32, kAngles = 64;
    for (int i = 0; i <= kRadii; ++i) {
        const double r = static_cast<double>(i) / kRadii;
        for (int j = 0; j < kAngles; ++j) {
            const cplx c = std::polar(r, 2.0 * M_PI * j / kAngles);
            const double res = std::abs(forward(c) - z);
            if (res < best_res) {
                best_res = res;
                best = c;
            }
        }
    }
    if (newton(best, w)) return w;
    throw OutsideDomainError("inverse: Newton iteration did not converge inside the disk");
}

cplx ConformalMap::boundary_point(double theta) const { return forward(std::polar(1.0, theta)); }

cplx ConformalMap::boundary_tangent(double theta) const {
    const cplx e = std::polar(1.0, theta);
    return cplx{0.0, 1.0} * e * derivative(e);
}

TaylorSeries ConformalMap::pullback(const TaylorSeries& h, const PullbackOptions& options) const {
    if (kind_ == Kind::identity) return h;
    const auto hc = h.coefficients();
    if (hc.empty()) return {};

    if (kind_ == Kind::polynomial) {
        const TaylorSeries phi([&] {
            std::vector<cplx> c(coeffs_.size() + 1);
            std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
            return c;
        }());
        TaylorSeries comp(std::vector<cplx>{hc.back()});
        for (std::size_t k = hc.size() - 1; k-- > 0;)
            comp = comp * phi + TaylorSeries(std::vector<cplx>{hc[k]});
        TaylorSeries out = comp * TaylorSeries(dcoeffs_);
        const auto oc = out.coefficients();
        if (static_cast<int>(oc.size()) - 1 > options.max_degree) {
            double dropped = 0.0;
            for (std::size_t k = options.max_degree + 1; k < oc.size(); ++k) dropped += std::norm(oc[k]);
            if (dropped > 0.0)
                throw TruncationError("pullback: composition degree exceeds max_degree",
                                      std::sqrt(dropped));
            return out.trimmed();
        }
        return out;
    }

    // Möbius: truncated power-series arithmetic.
    const int keep = options.max_degree;
    const int ext = keep + std::max(64, keep / 2);
    const cplx abar = std::conj(a_);
    std::vector<cplx> phi(ext + 1), dphi(ext + 1);
    {
        // φ(w) = λ(w - a) Σ (āw)^j,  φ'(w) = λ(1-|a|²) Σ (j+1)(āw)^j
        cplx p{1.0, 0.0};
        for (int j = 0; j <= ext; ++j) {
            phi[j] += -lambda_ * a_ * p;
            if (j + 1 <= ext) phi[j + 1] += lambda_ * p;
            dphi[j] = lambda_ * (1.0 - std::norm(a_)) * static_cast<double>(j + 1) * p;
            p *= abar;
        }
    }
    auto mul = [ext](const std::vector<cplx>& x, const std::vector<cplx>& y) {
        std::vector<cplx> z(ext + 1);
        for (int i = 0; i <= ext; ++i) {
            if (x[i] == cplx{}) continue;
            for (int j = 0; i + j <= ext; ++j) z[i + j] += x[i] * y[j];
        }
        return z;
    };
    std::vector<cplx> comp(ext + 1);
    comp[0] = hc.back();
    for (std::size_t k = hc.size() - 1; k-- > 0;) {
        comp = mul(comp, phi);
        comp[0] += hc[k];
    }
    std::vector<cplx> out = mul(comp, dphi);
    double kept = 0.0, dropped = 0.0;
    for (int k = 0; k <= ext; ++k) (k <= keep ? kept : dropped) += std::norm(out[k]);
    if (dropped > options.truncation_tol * options.truncation_tol * std::max(kept, 1e-300))
        throw TruncationError("pullback: Möbius expansion not resolved within max_degree",
                              std::sqrt(dropped));
    out.resize(keep + 1);
    return TaylorSeries(std::move(out)).trimmed();
}

std::vector<cplx> ConformalMap::kernel_taylor(cplx zeta, int degree) const {
    std::vector<cplx> c(std::max(degree, 0) + 1);
    if (kind_ == Kind::identity || kind_ == Kind::moebius) {
        const cplx abar = std::conj(a_);
        const cplx w0 = kind_ == Kind::identity ? zeta
                                                : (lambda_ * a_ + zeta) / (lambda_ + zeta * abar);
        if (w0 == cplx{}) throw DomainError("kernel_taylor: ζ = φ(0)");
        const cplx inv = 1.0 / w0;
        cplx p = inv;
        cplx q = abar;
        for (auto& cj : c) {
            cj = -p + (kind_ == Kind::moebius ? q : cplx{});
            p *= inv;
            q *= abar;
        }
        return c;
    }
    // 1/(φ(w) - ζ) by the recurrence p·q = 1, then multiply by φ'.
    if (zeta == cplx{}) throw DomainError("kernel_taylor: ζ = φ(0)");
    const int d = static_cast<int>(coeffs_.size());
    std::vector<cplx> q(c.size());
    const cplx p0 = -zeta;
    q[0] = 1.0 / p0;
    for (std::size_t m = 1; m < q.size(); ++m) {
        cplx acc{};
        for (int i = 1; i <= std::min<int>(static_cast<int>(m), d); ++i) acc += coeffs_[i - 1] * q[m - i];
        q[m] = -acc / p0;
    }
    for (std::size_t m = 0; m < c.size(); ++m) {
        cplx acc{};
        for (std::size_t i = 0; i <= m && i < dcoeffs_.size(); ++i) acc += dcoeffs_[i] * q[m - i];
        c[m] = acc;
    }
    return c;
}

UnivalenceReport ConformalMap::check_univalent(int grid) const {
    if (grid < 256) throw PreconditionError("check_univalent: grid must be >= 256");
    UnivalenceReport rep;

    const int radii = grid / 8;
    rep.min_derivative = std::numeric_limits<double>::infinity();
    cplx argmin{};
    for (int i = 0; i <= radii; ++i) {
        const double r = static_cast<double>(i) / radii;
        for (int j = 0; j < grid; ++j) {
            const cplx w = std::polar(r, 2.0 * M_PI * j / grid);
            const double d = std::abs(derivative(w));
            if (d < rep.min_derivative) {
                rep.min_derivative = d;
                argmin = w;
            }
        }
    }

    std::vector<cplx> dimage(grid), boundary(grid);
    for (int j = 0; j < grid; ++j) {
        const cplx e = std::polar(1.0, 2.0 * M_PI * j / grid);
        dimage[j] = derivative(e);
        boundary[j] = forward(e);
    }
    rep.derivative_zeros_inside = rep.min_derivative > 0.0 ? winding(dimage, 0.0) : -1;

    rep.boundary_simple = true;
    int bad_i = -1, bad_j = -1;
    for (int i = 0; i < grid && rep.boundary_simple; ++i) {
        for (int j = i + 2; j < grid; ++j) {
            if (i == 0 && j == grid - 1) continue;
            if (segments_intersect(boundary[i], boundary[(i + 1) % grid], boundary[j],
                                   boundary[(j + 1) % grid])) {
                rep.boundary_simple = false;
                bad_i = i;
                bad_j = j;
                break;
            }
        }
    }

    rep.winding_number = winding(boundary, forward(0.0));
    bool interior_ok = true;
    for (int j = 0; j < 8; ++j)
        interior_ok = interior_ok && winding(boundary, forward(std::polar(0.5, 2.0 * M_PI * j / 8))) == 1;

    std::ostringstream why;
    if (rep.min_derivative <= kDerivativeFloor) {
        why << "|φ'| = " << rep.min_derivative << " at w = " << format_complex(argmin);
    } else if (rep.derivative_zeros_inside != 0) {
        why << "φ' has " << rep.derivative_zeros_inside << " zero(s) in the unit disk";
    } else if (!rep.boundary_simple) {
        why << "boundary segments " << bad_i << " and " << bad_j << " intersect";
    } else if (rep.winding_number != 1 || !interior_ok) {
        why << "boundary winding number about φ(0) is " << rep.winding_number;
    }
    rep.witness = why.str();
    rep.pass = rep.witness.empty();
    return rep;
}

double ConformalMap::signed_distance(cplx zeta, double radius, int samples) const {
    std::vector<cplx> poly(samples);
    for (int j = 0; j < samples; ++j) poly[j] = forward(std::polar(radius, 2.0 * M_PI * j / samples));
    double best = std::numeric_limits<double>::infinity();
    int best_j = 0;
    for (int j = 0; j < samples; ++j) {
        const double d = segment_distance(zeta, poly[j], poly[(j + 1) % samples]);
        if (d < best) {
            best = d;
            best_j = j;
        }
    }
    // Golden-section refinement on the curve itself around the best segment.
    const double h = 2.0 * M_PI / samples;
    double lo = (best_j - 1) * h, hi = (best_j + 2) * h;
    auto dist = [&](double th) { return std::abs(forward(std::polar(radius, th)) - zeta); };
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = dist(x1), f2 = dist(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = dist(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = dist(x2);
        }
    }
    // Chords cut inside convex arcs, so the polyline value can undershoot; trust the curve.
    best = std::min(f1, f2);
    return winding(poly, zeta) != 0 ? -best : best;
}

double ConformalMap::max_modulus(double radius, int samples) const {
    double m = 0.0;
    for (int j = 0; j < samples; ++j)
        m = std::max(m, std::abs(forward(std::polar(radius, 2.0 * M_PI * j / samples))));
    return m;
}

int ConformalMap::angular_resolution() const {
    switch (kind_) {
        case Kind::identity:
            return 8;
        case Kind::polynomial:
            return std::max(32, 4 * degree() + 8);
        case Kind::moebius: {
            const double ra = std::abs(a_);
            if (ra == 0.0) return 8;
            const int m = static_cast<int>(std::ceil(40.0 / -std::log(ra)));
            return std::clamp(m + (m & 1), 32, 8192);
        }
    }
    return 32;
}

}  // namespace wcauchy
