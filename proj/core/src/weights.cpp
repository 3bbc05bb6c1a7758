#include "wcauchy/weights.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "wcauchy/conformal.hpp"
#include "wcauchy/errors.hpp"
#include "wcauchy/quadrature.hpp"

namespace wcauchy {

namespace {

std::string format_number(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

quad::QuadOptions options_for(double tol) {
    if (!(tol > 0.0)) throw PreconditionError("quadrature tolerance must be positive");
    quad::QuadOptions opt;
    opt.rel_tol = tol;
    return opt;
}

}  // namespace

WeightSpec WeightSpec::constant() { return WeightSpec{}; }

WeightSpec WeightSpec::power(double alpha) {
    if (!std::isfinite(alpha)) throw InvalidWeightError("power weight: exponent must be finite");
    WeightSpec w;
    w.family_ = WeightFamily::power;
    w.alpha_ = alpha;
    w.description_ = "pow:" + format_number(alpha);
    return w;
}

WeightSpec WeightSpec::double_exponential() {
    WeightSpec w;
    w.family_ = WeightFamily::double_exponential;
    w.description_ = "expexp";
    return w;
}

WeightSpec WeightSpec::tabulated(std::vector<WeightKnot> knots, std::string description) {
    if (knots.empty()) throw InvalidWeightError("tabulated weight: no knots");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const auto& k = knots[i];
        if (!(k.t > 0.0 && k.t <= 1.0)) throw InvalidWeightError("tabulated weight: t outside (0,1]");
        if (!(k.value > 0.0) || !std::isfinite(k.value))
            throw InvalidWeightError("tabulated weight: values must be positive and finite");
        if (i > 0 && !(k.t > knots[i - 1].t))
            throw InvalidWeightError("tabulated weight: t must be strictly increasing");
    }
    WeightSpec w;
    w.family_ = WeightFamily::tabulated;
    w.knots_ = std::move(knots);
    w.description_ = description.empty() ? "table" : std::move(description);
    return w;
}

WeightSpec WeightSpec::scaled(double c) const {
    if (!(c > 0.0) || !std::isfinite(c)) throw InvalidWeightError("weight scale must be positive");
    WeightSpec w = *this;
    w.scale_ *= c;
    w.description_ = format_number(c) + "*" + description_;
    return w;
}

double WeightSpec::log_value(double t) const {
    const double ls = std::log(scale_);
    switch (family_) {
        case WeightFamily::constant:
            return ls;
        case WeightFamily::power:
            return alpha_ * std::log(t) + ls;
        case WeightFamily::double_exponential:
            return -std::exp(1.0 / t) + ls;
        case WeightFamily::tabulated: {
            if (t <= knots_.front().t) return std::log(knots_.front().value) + ls;
            if (t >= knots_.back().t) return std::log(knots_.back().value) + ls;
            const auto hi = std::upper_bound(knots_.begin(), knots_.end(), t,
                                             [](double x, const WeightKnot& k) { return x < k.t; });
            const auto lo = hi - 1;
            const double s = (t - lo->t) / (hi->t - lo->t);
            return (1.0 - s) * std::log(lo->value) + s * std::log(hi->value) + ls;
        }
    }
    return ls;
}

std::optional<double> WeightSpec::log_log_inverse(double t) const {
    if (family_ == WeightFamily::double_exponential) {
        // log(e^{1/t} - log c), kept finite where e^{1/t} overflows.
        const double lc = std::log(scale_);
        const double inner = -lc * std::exp(-1.0 / t);
        if (!(inner > -1.0)) return std::nullopt;
        return 1.0 / t + std::log1p(inner);
    }
    const double l = -log_value(t);
    if (!(l > 0.0)) return std::nullopt;
    return std::log(l);
}

double WeightSpec::operator()(double t) const {
    if (!(t > 0.0 && t <= 1.0)) throw DomainError("weight evaluated outside (0,1]");
    double v;
    switch (family_) {
        case WeightFamily::constant:
            v = scale_;
            break;
        case WeightFamily::power:
            v = scale_ * std::pow(t, alpha_);
            break;
        default:
            v = std::exp(log_value(t));
    }
    if (family_ == WeightFamily::tabulated && !(v > 0.0))
        throw InvalidWeightError("tabulated weight: nonpositive interpolated value");
    return v;
}

double eval_weight(const WeightSpec& w, double t) { return w(t); }

double moment(const WeightSpec& w, int k, double tol) {
    if (k < 0) throw PreconditionError("moment: k must be >= 0");
    const int e = 2 * k + 1;
    auto f = [&](quad::UnitPoint p) { return 2.0 * std::pow(p.r, e) * w(p.rc); };
    const auto res = quad::integrate_01(f, options_for(tol));
    if (res.divergent) throw DivergenceError("moment: integral diverges (weight not integrable)");
    return res.value;
}

ImproperValue inverse_moment(const WeightSpec& w, int k, double tol) {
    if (k < 0) throw PreconditionError("inverse_moment: k must be >= 0");
    const int e = 2 * k + 1;
    auto f = [&](quad::UnitPoint p) { return std::pow(p.r, e) * std::exp(-w.log_value(p.rc)); };
    const auto res = quad::integrate_01(f, options_for(tol));
    if (res.divergent) return ImproperValue::diverged();
    return ImproperValue::finite(res.value);
}

MomentSequence::MomentSequence(WeightSpec weight, double tol) : weight_(std::move(weight)), tol_(tol) {
    if (!(tol > 0.0)) throw PreconditionError("MomentSequence: tolerance must be positive");
}

MomentSequence::MomentSequence(const MomentSequence& other) : weight_(other.weight_), tol_(other.tol_) {
    std::shared_lock lock(other.mutex_);
    omega_ = other.omega_;
    sigma_ = other.sigma_;
}

double MomentSequence::omega(int k) const {
    {
        std::shared_lock lock(mutex_);
        if (auto it = omega_.find(k); it != omega_.end()) return it->second;
    }
    const double v = moment(weight_, k, tol_);
    std::unique_lock lock(mutex_);
    omega_.emplace(k, v);
    return v;
}

ImproperValue MomentSequence::sigma(int k) const {
    {
        std::shared_lock lock(mutex_);
        if (auto it = sigma_.find(k); it != sigma_.end()) return it->second;
    }
    const ImproperValue v = inverse_moment(weight_, k, tol_);
    std::unique_lock lock(mutex_);
    sigma_.emplace(k, v);
    return v;
}

ImproperValue muckenhoupt_ratio(const MomentSequence& moments, int k) {
    const ImproperValue s = moments.sigma(k);
    if (s.divergent) return s;
    const double kk = k + 1.0;
    return ImproperValue::finite(kk * kk * 0.5 * moments.omega(k) * s.value);
}

RatioBoundReport check_ratio_bound(const MomentSequence& moments, int k_max) {
    if (k_max < 1) throw PreconditionError("check_ratio_bound: k_max must be >= 1");
    RatioBoundReport rep;
    bool divergent = false;
    rep.ratios.reserve(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        const auto m = muckenhoupt_ratio(moments, k);
        rep.ratios.push_back(m);
        if (m.divergent) {
            divergent = true;
            continue;
        }
        rep.sup = std::max(rep.sup, m.value);
        if (k <= k_max / 10) rep.sup_first_decade = std::max(rep.sup_first_decade, m.value);
    }
    if (divergent)
        rep.verdict = RatioBoundVerdict::divergent;
    else if (rep.sup > 0.0 && (rep.sup - rep.sup_first_decade) < 0.01 * rep.sup)
        rep.verdict = RatioBoundVerdict::bounded_observed;
    else
        rep.verdict = RatioBoundVerdict::inconclusive;
    return rep;
}

RatioFloorReport check_ratio_floor(const MomentSequence& moments, int k_max) {
    if (k_max < 1) throw PreconditionError("check_ratio_floor: k_max must be >= 1");
    RatioFloorReport rep;
    rep.threshold = 0.25 - 10.0 * moments.tolerance();
    rep.min = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= k_max; ++k) {
        const auto m = muckenhoupt_ratio(moments, k);
        if (m.divergent) {
            rep.all_finite = false;
            continue;
        }
        if (m.value < rep.min) {
            rep.min = m.value;
            rep.argmin = k;
        }
    }
    rep.pass = rep.all_finite && rep.min >= rep.threshold;
    return rep;
}

VolbergReport check_volberg(const WeightSpec& w, std::span<const double> samples) {
    if (samples.size() < 2) throw PreconditionError("check_volberg: need at least two samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i] > 0.0 && samples[i] <= 1.0))
            throw PreconditionError("check_volberg: samples must lie in (0,1]");
        if (i > 0 && !(samples[i] < samples[i - 1]))
            throw PreconditionError("check_volberg: samples must be strictly decreasing");
    }
    VolbergReport rep;
    bool undefined = false;
    for (double t : samples) {
        VolbergSample s;
        s.t = t;
        s.log_log = w.log_log_inverse(t);
        if (!s.log_log) undefined = true;
        s.t_log_inverse = s.log_log ? t * std::exp(*s.log_log) : t * -w.log_value(t);
        rep.samples.push_back(s);
    }

    rep.monotone = true;
    for (std::size_t i = 1; i < rep.samples.size(); ++i) {
        const double prev = rep.samples[i - 1].t_log_inverse, cur = rep.samples[i].t_log_inverse;
        if (std::isinf(cur) && cur > 0) continue;
        if (!(cur >= prev)) rep.monotone = false;
    }

    if (!undefined) {
        double acc = 0.0;
        rep.samples[0].partial = 0.0;
        for (std::size_t i = 1; i < rep.samples.size() && !undefined; ++i) {
            const double lo = samples[i], hi = samples[i - 1];
            auto f = [&](quad::UnitPoint p) {
                const auto v = w.log_log_inverse(p.r);
                return v ? *v : std::numeric_limits<double>::quiet_NaN();
            };
            const auto part = quad::integrate_range(f, lo, hi);
            if (part.divergent || !std::isfinite(part.value)) {
                undefined = true;
                break;
            }
            acc += part.value;
            rep.samples[i].partial = acc;
        }
    }

    if (!undefined && rep.samples.size() >= 3) {
        std::vector<double> density;
        for (std::size_t i = 1; i < rep.samples.size(); ++i) {
            const double inc = *rep.samples[i].partial - *rep.samples[i - 1].partial;
            density.push_back(inc / std::log(samples[i - 1] / samples[i]));
        }
        const double peak = *std::max_element(density.begin(), density.end());
        rep.integral_growing = peak > 0.0 && density.back() >= 0.5 * peak;
    }

    if (undefined)
        rep.verdict = VolbergVerdict::undefined;
    else if (!rep.monotone)
        rep.verdict = VolbergVerdict::fails_monotonicity;
    else if (!rep.integral_growing)
        rep.verdict = VolbergVerdict::integral_appears_convergent;
    else
        rep.verdict = VolbergVerdict::consistent_with_condition;
    return rep;
}

ImproperValue check_integrability(const WeightSpec& w, const ConformalMap& map, double tol) {
    const auto res = quad::annulus_mass(map, w, 1.0, options_for(tol));
    if (res.divergent) return ImproperValue::diverged();
    return ImproperValue::finite(res.value);
}

std::string to_string(RatioBoundVerdict v) {
    switch (v) {
        case RatioBoundVerdict::bounded_observed:
            return "bounded-observed";
        case RatioBoundVerdict::divergent:
            return "divergent";
        case RatioBoundVerdict::inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

std::string to_string(VolbergVerdict v) {
    switch (v) {
        case VolbergVerdict::consistent_with_condition:
            return "consistent-with-condition";
        case VolbergVerdict::fails_monotonicity:
            return "fails-monotonicity";
        case VolbergVerdict::integral_appears_convergent:
            return "integral-appears-convergent";
        case VolbergVerdict::undefined:
            return "undefined";
    }
    return "undefined";
}

}  // namespace wcauchy
