#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

namespace wcauchy {

class ConformalMap;

enum class WeightFamily { constant, power, double_exponential, tabulated };

struct WeightKnot {
    double t;
    double value;
};

/// A positive radial weight ω on (0,1], optionally multiplied by a
/// positive constant.
class WeightSpec {
public:
    /// ω ≡ 1.
    static WeightSpec constant();
    /// ω(t) = t^α.
    static WeightSpec power(double alpha);
    /// ω(t) = exp(-exp(1/t)).
    static WeightSpec double_exponential();
    /// Log-linear interpolation between knots (strictly increasing t in
    /// (0,1], positive values), constant extension outside the knot range.
    static WeightSpec tabulated(std::vector<WeightKnot> knots, std::string description = {});

    /// c·ω for c > 0.
    WeightSpec scaled(double c) const;

    WeightFamily family() const { return family_; }
    double alpha() const { return alpha_; }
    double scale() const { return scale_; }
    std::span<const WeightKnot> knots() const { return knots_; }
    const std::string& description() const { return description_; }

    /// log ω(t); exact in closed form for the builtin families, so it stays
    /// finite where ω itself underflows.
    double log_value(double t) const;
    /// log log(1/ω(t)), or nullopt when ω(t) >= 1.
    std::optional<double> log_log_inverse(double t) const;
    /// ω(t). Throws DomainError unless 0 < t <= 1.
    double operator()(double t) const;

private:
    WeightFamily family_ = WeightFamily::constant;
    double alpha_ = 0.0;
    double scale_ = 1.0;
    std::vector<WeightKnot> knots_;
    std::string description_ = "const";
};

/// ω(t), with the domain check of the operator() form.
double eval_weight(const WeightSpec& w, double t);

/// A real value that may instead be flagged divergent.
struct ImproperValue {
    double value = 0.0;
    bool divergent = false;

    static ImproperValue finite(double v) { return {v, false}; }
    static ImproperValue diverged() { return {0.0, true}; }
};

constexpr double kDefaultMomentTol = 1e-10;

/// ω_k = 2∫₀¹ r^{2k+1} ω(1-r) dr to relative accuracy tol. Throws
/// AccuracyError on quadrature failure and DivergenceError when the
/// integral diverges (a weight that is not integrable at 0).
double moment(const WeightSpec& w, int k, double tol = kDefaultMomentTol);

/// σ_k = ∫₀¹ r^{2k+1} / ω(1-r) dr, or divergent.
ImproperValue inverse_moment(const WeightSpec& w, int k, double tol = kDefaultMomentTol);

/// Lazily computed moments of one weight. Reads are shared, cache fills are
/// exclusive, so one instance may be used from several threads.
class MomentSequence {
public:
    explicit MomentSequence(WeightSpec weight, double tol = kDefaultMomentTol);
    MomentSequence(const MomentSequence& other);
    MomentSequence& operator=(const MomentSequence&) = delete;

    const WeightSpec& weight() const { return weight_; }
    double tolerance() const { return tol_; }

    /// ω_k (cached).
    double omega(int k) const;
    /// σ_k (cached).
    ImproperValue sigma(int k) const;

private:
    WeightSpec weight_;
    double tol_;
    mutable std::shared_mutex mutex_;
    mutable std::map<int, double> omega_;
    mutable std::map<int, ImproperValue> sigma_;
};

/// M_k = (k+1)² (ω_k / 2) σ_k.
ImproperValue muckenhoupt_ratio(const MomentSequence& moments, int k);

enum class RatioBoundVerdict { bounded_observed, divergent, inconclusive };

struct RatioBoundReport {
    std::vector<ImproperValue> ratios;  // M_0..M_kmax
    double sup = 0.0;
    /// Sup over k <= kmax/10, the baseline the stabilization test compares with.
    double sup_first_decade = 0.0;
    RatioBoundVerdict verdict = RatioBoundVerdict::inconclusive;
};

/// sup_k M_k for k <= k_max. "bounded-observed" when the running sup over
/// the last decade of k (k_max/10 < k <= k_max) moves it by less than 1%.
RatioBoundReport check_ratio_bound(const MomentSequence& moments, int k_max);

struct RatioFloorReport {
    double min = 0.0;
    int argmin = 0;
    double threshold = 0.0;
    bool pass = false;
    bool all_finite = true;
};

/// M_k >= 1/4 - 10·tol for all k <= k_max.
RatioFloorReport check_ratio_floor(const MomentSequence& moments, int k_max);

enum class VolbergVerdict {
    consistent_with_condition,
    fails_monotonicity,
    integral_appears_convergent,
    undefined
};

struct VolbergSample {
    double t = 0.0;
    double t_log_inverse = 0.0;          // t·log(1/ω(t))
    std::optional<double> log_log;       // log log(1/ω(t))
    std::optional<double> partial;       // ∫_{t}^{t_0} log log(1/ω) dt
};

struct VolbergReport {
    std::vector<VolbergSample> samples;
    bool monotone = false;
    bool integral_growing = false;
    VolbergVerdict verdict = VolbergVerdict::undefined;
};

/// Sampled diagnostic of t·log(1/ω(t)) ↑ ∞ and ∫₀ log log(1/ω) = ∞ on a
/// strictly decreasing list of sample points in (0,1].
VolbergReport check_volberg(const WeightSpec& w, std::span<const double> samples);

/// ∬_G ω(1-|ψ(z)|) dm₂ = ∬_𝔻 |φ'(w)|² ω(1-|w|) dm₂(w), or divergent.
ImproperValue check_integrability(const WeightSpec& w, const ConformalMap& map,
                                  double tol = 1e-8);

std::string to_string(RatioBoundVerdict v);
std::string to_string(VolbergVerdict v);

}  // namespace wcauchy
