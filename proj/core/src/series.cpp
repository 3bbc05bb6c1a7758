#include "wcauchy/series.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "wcauchy/errors.hpp"
#include "wcauchy/weights.hpp"

namespace wcauchy {

TaylorSeries::TaylorSeries(std::vector<cplx> coefficients) : coeffs_(std::move(coefficients)) {}

int TaylorSeries::degree() const {
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k)
        if (coeffs_[k] != cplx{}) return k;
    return -1;
}

TaylorSeries TaylorSeries::trimmed() const {
    const int d = degree();
    return TaylorSeries(std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + (d + 1)));
}

cplx TaylorSeries::evaluate_unchecked(cplx z) const {
    cplx acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cplx TaylorSeries::operator()(cplx z) const {
    if (std::abs(z) > 1.0 + 1e-12) throw DomainError("TaylorSeries: |z| > 1");
    return evaluate_unchecked(z);
}

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) {
    std::vector<cplx> out(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
    return TaylorSeries(std::move(out));
}

TaylorSeries operator*(cplx s, const TaylorSeries& a) {
    std::vector<cplx> out(a.coeffs_);
    for (auto& c : out) c *= s;
    return TaylorSeries(std::move(out));
}

TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
    if (a.size() == 0 || b.size() == 0) return {};
    std::vector<cplx> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return TaylorSeries(std::move(out));
}

bool operator==(const TaylorSeries& a, const TaylorSeries& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k)
        if (a[k] != b[k]) return false;
    return true;
}

LaurentSeries::LaurentSeries(std::vector<cplx> coefficients) : coeffs_(std::move(coefficients)) {}

cplx LaurentSeries::coefficient(std::size_t k) const {
    if (k == 0 || k > coeffs_.size()) return {};
    return coeffs_[k - 1];
}

cplx LaurentSeries::evaluate_unchecked(cplx zeta) const {
    const cplx u = 1.0 / zeta;
    cplx acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc + *it) * u;
    return acc;
}

cplx LaurentSeries::operator()(cplx zeta, double standoff) const {
    if (std::abs(zeta) < 1.0 + standoff)
        throw DomainError("LaurentSeries: evaluation point inside the exclusion zone");
    return evaluate_unchecked(zeta);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 1; k <= n; ++k)
        if (a.coefficient(k) != b.coefficient(k)) return false;
    return true;
}

LaurentSeries derivative_laurent(const LaurentSeries& s) {
    if (s.size() == 0) return {};
    std::vector<cplx> out(s.size() + 1);
    for (std::size_t k = 1; k <= s.size(); ++k)
        out[k] = -static_cast<double>(k) * s.coefficient(k);  // ζ^{-(k+1)} lives at index k
    return LaurentSeries(std::move(out));
}

BoundaryFunction::BoundaryFunction(int window, std::vector<cplx> coefficients, int sample_count)
    : window_(window), samples_(sample_count), coeffs_(std::move(coefficients)) {
    if (window < 0 || coeffs_.size() != static_cast<std::size_t>(2 * window + 1))
        throw PreconditionError("BoundaryFunction: coefficient count must be 2K+1");
}

cplx BoundaryFunction::coefficient(int k) const {
    if (k < -window_ || k > window_) return {};
    return coeffs_[k + window_];
}

void BoundaryFunction::set_coefficient(int k, cplx value) {
    if (k < -window_ || k > window_) throw PreconditionError("BoundaryFunction: index outside window");
    coeffs_[k + window_] = value;
}

BoundaryFunction BoundaryFunction::from_laurent(const LaurentSeries& s, int window) {
    BoundaryFunction f(window, std::vector<cplx>(2 * window + 1));
    for (int k = 1; k <= window; ++k) f.set_coefficient(-k, s.coefficient(k));
    return f;
}

LaurentSeries BoundaryFunction::negative_part() const {
    std::vector<cplx> b(window_);
    for (int k = 1; k <= window_; ++k) b[k - 1] = coefficient(-k);
    return LaurentSeries(std::move(b));
}

BoundaryFunction fourier_coeffs(std::span<const cplx> samples, int window) {
    const auto n = static_cast<long>(samples.size());
    if (window < 0 || n < 4L * window + 4)
        throw PreconditionError("fourier_coeffs: need N >= 4K + 4 samples");
    // e^{-2πi m/N} for m = 0..N-1; k·j is reduced mod N so every phase is a
    // table lookup rather than a large-angle cos/sin.
    std::vector<cplx> roots(n);
    for (long m = 0; m < n; ++m) roots[m] = std::polar(1.0, -2.0 * M_PI * static_cast<double>(m) / n);
    std::vector<cplx> coeffs(2 * window + 1);
    for (int k = -window; k <= window; ++k) {
        const long kk = ((k % n) + n) % n;
        cplx acc{};
        for (long j = 0; j < n; ++j) acc += samples[j] * roots[(kk * j) % n];
        coeffs[k + window] = acc / static_cast<double>(n);
    }
    return BoundaryFunction(window, std::move(coeffs), static_cast<int>(n));
}

double rho(const BoundaryFunction& f, const MomentSequence& moments) {
    double sum = 0.0;
    for (int k = 1; k <= f.window(); ++k) {
        const double c = std::norm(f.coefficient(-k));
        if (c == 0.0) continue;
        sum += c / moments.omega(k - 1);
    }
    return std::sqrt(M_PI * sum);
}

namespace io {

std::string to_json(std::span<const cplx> coefficients) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coefficients) arr.push_back({c.real(), c.imag()});
    return arr.dump();
}

std::vector<cplx> from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw PreconditionError(std::string("series JSON: ") + e.what());
    }
    if (!arr.is_array()) throw PreconditionError("series JSON: expected an array of [re, im] pairs");
    std::vector<cplx> out;
    out.reserve(arr.size());
    for (const auto& item : arr) {
        if (item.is_number()) {
            out.emplace_back(item.get<double>(), 0.0);
        } else if (item.is_array() && item.size() == 2 && item[0].is_number() && item[1].is_number()) {
            out.emplace_back(item[0].get<double>(), item[1].get<double>());
        } else {
            throw PreconditionError("series JSON: entries must be [re, im] pairs");
        }
    }
    return out;
}

std::string fourier_csv(const BoundaryFunction& f) {
    std::ostringstream os;
    os << std::setprecision(17) << "k,re,im\n";
    for (int k = -f.window(); k <= f.window(); ++k) {
        const cplx c = f.coefficient(k);
        os << k << ',' << c.real() << ',' << c.imag() << '\n';
    }
    return os.str();
}

}  // namespace io

}  // namespace wcauchy
