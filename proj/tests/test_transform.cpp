#include <doctest.h>

#include <cmath>
#include <memory>

#include "oracles.hpp"
#include "wcauchy/errors.hpp"
#include "wcauchy/random.hpp"
#include "wcauchy/transform.hpp"

using namespace wcauchy;

namespace {

std::shared_ptr<const MomentSequence> moments_of(const WeightSpec& w) {
    return std::make_shared<const MomentSequence>(w);
}

BergmanElement element(std::vector<cplx> a, const WeightSpec& w) {
    return {TaylorSeries(std::move(a)), moments_of(w), std::nullopt};
}

CauchyImage image(std::vector<cplx> b, const WeightSpec& w) { return {LaurentSeries(std::move(b)), moments_of(w)}; }

const auto kConst = WeightSpec::constant();
const auto kHalf = WeightSpec::power(0.5);

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("bergman norms") {
    CHECK(bergman_norm_series(element({1.0}, kConst)) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
    CHECK(bergman_norm_series(element({1.0, 1.0}, kConst)) ==
          doctest::Approx(std::sqrt(1.5 * M_PI)).epsilon(1e-10));
    CHECK(bergman_norm_series(element({0.0, 1.0}, kHalf)) ==
          doctest::Approx(std::sqrt(M_PI * oracle::power_moment(1, 0.5))).epsilon(1e-10));

    const auto e0 = element({1.0}, kConst);
    CHECK(bergman_norm_quadrature(e0, quad::weighted_disk_rule(0)) ==
          doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
    const auto e1 = element({1.0, cplx(0, 2)}, kConst);
    CHECK(bergman_norm_quadrature(e1, quad::weighted_disk_rule(1)) ==
          doctest::Approx(std::sqrt(3 * M_PI)).epsilon(1e-10));

    Rng rng(5);
    for (auto w : {kHalf, WeightSpec::power(-0.5), WeightSpec::double_exponential()}) {
        const BergmanElement e{random_series(rng, 16), moments_of(w), std::nullopt};
        CHECK(bergman_norm_quadrature(e, quad::weighted_disk_rule(16)) ==
              doctest::Approx(bergman_norm_series(e)).epsilon(1e-8));
    }
    CHECK_THROWS_AS(bergman_norm_quadrature(element(std::vector<cplx>(17, 1.0), kConst),
                                            quad::weighted_disk_rule(4)),
                    PreconditionError);
}

TEST_CASE("disk transform coefficients") {
    auto c0 = cauchy_transform_disk(element({1.0}, kConst));
    CHECK(std::abs(c0.series.coefficient(1) - cplx(-1.0)) < 1e-10);
    auto c1 = cauchy_transform_disk(element({0.0, 1.0}, kConst));
    CHECK(std::abs(c1.series.coefficient(2) - cplx(-0.5)) < 1e-10);
    CHECK(std::abs(c1.series.coefficient(1)) == 0.0);
    auto ci = cauchy_transform_disk(element({cplx(0, 1)}, kConst));
    CHECK(std::abs(ci.series.coefficient(1) - cplx(0, 1)) < 1e-10);
}

TEST_CASE("antilinearity") {
    Rng rng(17);
    const auto ms = moments_of(kHalf);
    const TaylorSeries f = random_series(rng, 8), g = random_series(rng, 8);
    const cplx lam(0.7, -1.3);
    const auto lhs = cauchy_transform_disk({f + lam * g, ms, std::nullopt}).series;
    const auto kf = cauchy_transform_disk({f, ms, std::nullopt}).series;
    const auto kg = cauchy_transform_disk({g, ms, std::nullopt}).series;
    for (std::size_t k = 1; k <= 9; ++k)
        CHECK(std::abs(lhs.coefficient(k) - (kf.coefficient(k) + std::conj(lam) * kg.coefficient(k))) < 1e-14);
}

TEST_CASE("isometry on random series") {
    Rng rng(23);
    for (auto w : {kConst, kHalf, WeightSpec::power(-0.5), WeightSpec::double_exponential()}) {
        const auto ms = moments_of(w);
        for (int trial = 0; trial < 5; ++trial) {
            const BergmanElement e{random_series(rng, rng.integer(0, 32)), ms, std::nullopt};
            const double a = bergman_norm_series(e);
            const double b = b21_norm_series(cauchy_transform_disk(e));
            CHECK(std::abs(a - b) <= 1e-12 * a);
        }
    }
}

TEST_CASE("transform by quadrature") {
    const auto id = ConformalMap::identity();
    CHECK(std::abs(cauchy_transform_quadrature(element({1.0}, kConst), id, 2.0) - cplx(-0.5)) < 1e-10);
    CHECK(std::abs(cauchy_transform_quadrature(element({0.0, 1.0}, kConst), id, 2.0) - cplx(-0.125)) < 1e-10);
    CHECK_THROWS_AS(cauchy_transform_quadrature(element({1.0}, kConst), id, 1.01), StandoffError);

    // Through φ = z + z²/4: kernel expansion against 2D quadrature.
    const auto poly = ConformalMap::polynomial({1.0, 0.25});
    const BergmanElement e{TaylorSeries({1.0}), moments_of(kConst), poly};
    const cplx q = cauchy_transform_quadrature(e, poly, 3.0);
    const cplx x = cauchy_transform_expansion(e, poly, 3.0);
    CHECK(std::abs(q - x) < 1e-10);

    // Kg is analytic outside Ḡ and vanishes at ∞, so its values on |ζ| = 3 follow
    // from its values on |ζ| = 2 by the exterior Cauchy formula.
    const int N = 128;
    std::vector<cplx> ring(N);
    for (int j = 0; j < N; ++j) ring[j] = cauchy_transform_expansion(e, poly, std::polar(2.0, 2 * M_PI * j / N));
    cplx acc{};
    for (int j = 0; j < N; ++j) {
        const cplx t = std::polar(2.0, 2 * M_PI * j / N);
        acc += ring[j] * t / (t - 3.0);
    }
    CHECK(std::abs(-acc / double(N) - q) < 1e-10);
}

TEST_CASE("b21 norms") {
    CHECK(b21_norm_series(image({-1.0}, kConst)) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
    CHECK(b21_norm_series(image({-1.0, -0.5}, kConst)) == doctest::Approx(std::sqrt(1.5 * M_PI)).epsilon(1e-10));
    CHECK(b21_norm_series(image({0.0, 1.0}, kHalf)) ==
          doctest::Approx(std::sqrt(M_PI / oracle::power_moment(1, 0.5))).epsilon(1e-10));
}

TEST_CASE("dirichlet norms") {
    const auto s1 = dirichlet_norm_series(image({1.0}, kConst));
    CHECK(s1.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
    const auto s2 = dirichlet_norm_series(image({1.0, 0.5}, kConst));
    CHECK(s2.value == doctest::Approx(std::sqrt(1.5 * M_PI)).epsilon(1e-10));
    const auto s3 = dirichlet_norm_series(image({1.0}, kHalf));
    CHECK(s3.value == doctest::Approx(std::sqrt(2 * M_PI * 4.0 / 3.0)).epsilon(1e-10));
    CHECK(dirichlet_norm_series(image({1.0}, WeightSpec::power(1.0))).divergent);

    const auto q1 = dirichlet_norm_quadrature(image({1.0}, kConst), dirichlet_rule(1));
    CHECK(q1.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-8));
    const auto q2 = dirichlet_norm_quadrature(image({0.0, 1.0}, kConst), dirichlet_rule(2));
    CHECK(q2.value == doctest::Approx(std::sqrt(2 * M_PI)).epsilon(1e-8));
    const auto q3 = dirichlet_norm_quadrature(image({1.0}, kHalf), dirichlet_rule(1));
    CHECK(q3.value == doctest::Approx(std::sqrt(2 * M_PI * 4.0 / 3.0)).epsilon(1e-8));
    CHECK(dirichlet_norm_quadrature(image({1.0}, WeightSpec::power(1.5)), dirichlet_rule(1)).divergent);

    Rng rng(31);
    std::vector<cplx> b(12);
    for (auto& x : b) x = rng.complex_in_square();
    const auto c = image(b, WeightSpec::power(-0.5));
    CHECK(dirichlet_norm_quadrature(c, dirichlet_rule(12)).value ==
          doctest::Approx(dirichlet_norm_series(c).value).epsilon(1e-6));
}

TEST_CASE("pairing functional") {
    BoundaryFunction g(2, std::vector<cplx>(5));
    g.set_coefficient(-1, 1.0);
    CHECK(pairing_functional(g, TaylorSeries({1.0})) == cplx(-1.0));
    CHECK(pairing_functional(g, TaylorSeries({0.0})) == cplx(0.0));
    BoundaryFunction g2(2, std::vector<cplx>(5));
    g2.set_coefficient(-2, 2.0);
    CHECK(pairing_functional(g2, TaylorSeries({0.0, 3.0})) == cplx(-6.0));
    CHECK_THROWS_AS(pairing_functional(g2, TaylorSeries({0.0, 0.0, 1.0})), PreconditionError);
}

TEST_CASE("cauchy-schwarz bound") {
    MomentSequence c(kConst);
    BoundaryFunction g(2, std::vector<cplx>(5));
    g.set_coefficient(-1, 1.0);
    const auto eq = check_cs_bound(g, TaylorSeries({1.0}), c);
    CHECK(eq.pass);
    CHECK(eq.pairing == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eq.bound == doctest::Approx(1.0).epsilon(1e-10));
    const auto orth = check_cs_bound(g, TaylorSeries({0.0, 1.0}), c);
    CHECK(orth.pass);
    CHECK(orth.pairing == 0.0);

    Rng rng(41);
    const WeightSpec ws[] = {kConst, kHalf, WeightSpec::power(-0.5), WeightSpec::power(2.0),
                             WeightSpec::double_exponential()};
    for (int trial = 0; trial < 100; ++trial) {
        MomentSequence m(ws[trial % 5]);
        const int deg = rng.integer(0, 10);
        const int K = deg + 1 + rng.integer(0, 5);
        std::vector<cplx> coeffs(2 * K + 1);
        for (auto& x : coeffs) x = rng.complex_in_square();
        CHECK(check_cs_bound(BoundaryFunction(K, coeffs), random_series(rng, deg), m).pass);
    }
}

TEST_CASE("per-term ratio") {
    MomentSequence c(kConst);
    for (int k : {1, 2, 50, 150}) CHECK(per_term_ratio(c, k).value == doctest::Approx(1.0).epsilon(1e-9));
    for (double a : {0.5, -0.5}) {
        MomentSequence m(WeightSpec::power(a));
        const double r = per_term_ratio(m, 50).value;
        CHECK(r == doctest::Approx(4.0 * oracle::power_ratio(49, a)).epsilon(1e-9));
        CHECK(r >= 1.0);
        CHECK(r <= 4.0 * check_ratio_bound(m, 200).sup + 1e-9);
    }
    CHECK_THROWS_AS(per_term_ratio(c, 0), PreconditionError);
}

}  // TEST_SUITE
