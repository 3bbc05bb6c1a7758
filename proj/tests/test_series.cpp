#include <doctest.h>

#include <cmath>
#include <vector>

#include "wcauchy/errors.hpp"
#include "wcauchy/random.hpp"
#include "wcauchy/series.hpp"
#include "wcauchy/weights.hpp"

using namespace wcauchy;

namespace {

std::vector<cplx> sample_circle(int n, auto f) {
    std::vector<cplx> s(n);
    for (int j = 0; j < n; ++j) s[j] = f(std::polar(1.0, 2.0 * M_PI * j / n));
    return s;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("taylor evaluation") {
    CHECK(TaylorSeries({1.0})(cplx(0, 0.5)) == cplx(1.0));
    CHECK(TaylorSeries({0.0, 1.0})(cplx(0.3, 0.4)) == cplx(0.3, 0.4));
    CHECK(TaylorSeries({1.0, 2.0, 1.0})(0.5) == cplx(2.25));
    CHECK_THROWS_AS(TaylorSeries({1.0})(cplx(1.1, 0)), DomainError);
    CHECK(TaylorSeries({1.0, 0.0, 0.0}).degree() == 0);
    CHECK(TaylorSeries({0.0}).degree() == -1);
    CHECK(TaylorSeries({1.0, 2.0, 0.0}).trimmed().size() == 2);
}

TEST_CASE("laurent evaluation") {
    CHECK(std::abs(LaurentSeries({-1.0})(2.0) - cplx(-0.5)) < 1e-15);
    CHECK(std::abs(LaurentSeries({0.0, 3.0})(cplx(1, 1)) - cplx(0, -1.5)) < 1e-15);
    CHECK(std::abs(LaurentSeries({-1.0, -0.5})(2.0) - cplx(-0.625)) < 1e-15);
    CHECK_THROWS_AS(LaurentSeries({1.0})(cplx(1.0000001, 0)), DomainError);
    CHECK_NOTHROW(LaurentSeries({1.0})(cplx(1.00001, 0)));

    LaurentSeries real({1.0, -2.0, 0.5, 3.0});
    const cplx z(1.3, -0.7);
    CHECK(std::abs(real(std::conj(z)) - std::conj(real(z))) < 1e-14);
}

TEST_CASE("laurent derivative") {
    auto d1 = derivative_laurent(LaurentSeries({1.0}));
    CHECK(d1.coefficient(2) == cplx(-1.0));
    CHECK(d1.coefficient(1) == cplx(0.0));
    auto d2 = derivative_laurent(LaurentSeries({0.0, -0.5}));
    CHECK(d2.coefficient(3) == cplx(1.0));
    auto d3 = derivative_laurent(LaurentSeries({1.0, 0.0, 2.0}));
    CHECK(d3.coefficient(2) == cplx(-1.0));
    CHECK(d3.coefficient(4) == cplx(-6.0));
    // Against a central difference.
    LaurentSeries s({0.3, cplx(0, 1), -2.0});
    const cplx z(1.7, 0.4);
    const double h = 1e-5;
    const cplx fd = (s(z + h) - s(z - h)) / (2 * h);
    CHECK(std::abs(derivative_laurent(s)(z) - fd) < 1e-9);
}

TEST_CASE("fourier extraction") {
    auto f = fourier_coeffs(sample_circle(16, [](cplx t) { return 1.0 / t; }), 3);
    for (int k = -3; k <= 3; ++k) CHECK(std::abs(f.coefficient(k) - cplx(k == -1 ? 1.0 : 0.0)) < 1e-14);

    auto g = fourier_coeffs(sample_circle(16, [](cplx t) { return 2.0 + t * t; }), 3);
    CHECK(std::abs(g.coefficient(0) - cplx(2.0)) < 1e-14);
    CHECK(std::abs(g.coefficient(2) - cplx(1.0)) < 1e-14);
    CHECK(std::abs(g.coefficient(1)) < 1e-14);

    CHECK_THROWS_AS(fourier_coeffs(std::vector<cplx>(15), 3), PreconditionError);
}

TEST_CASE("fourier roundtrip") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int K = rng.integer(1, 40);
        std::vector<cplx> c(2 * K + 1);
        for (auto& x : c) x = rng.complex_in_square();
        const int n = 4 * K + 4 + rng.integer(0, 9);
        auto samples = sample_circle(n, [&](cplx t) {
            cplx acc{};
            for (int k = -K; k <= K; ++k) acc += c[k + K] * std::pow(t, k);
            return acc;
        });
        auto f = fourier_coeffs(samples, K);
        for (int k = -K; k <= K; ++k) CHECK(std::abs(f.coefficient(k) - c[k + K]) < 1e-12);
    }
}

TEST_CASE("rho functional") {
    MomentSequence c(WeightSpec::constant());
    BoundaryFunction f(2, std::vector<cplx>(5));
    CHECK(rho(f, c) == 0.0);
    f.set_coefficient(-1, 1.0);
    CHECK(rho(f, c) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
    f.set_coefficient(-2, 1.0);
    CHECK(rho(f, c) == doctest::Approx(std::sqrt(3 * M_PI)).epsilon(1e-10));

    // Enlarging the window never decreases ρ.
    Rng rng(11);
    std::vector<cplx> b(30);
    for (auto& x : b) x = rng.complex_in_square();
    LaurentSeries s(b);
    double prev = 0.0;
    for (int K = 1; K <= 30; ++K) {
        const double r = rho(BoundaryFunction::from_laurent(s, K), c);
        CHECK(r >= prev);
        prev = r;
    }
}

TEST_CASE("boundary function and laurent windows") {
    LaurentSeries s({1.0, cplx(0, 2), 3.0});
    auto f = BoundaryFunction::from_laurent(s, 4);
    CHECK(f.coefficient(-2) == cplx(0, 2));
    CHECK(f.coefficient(2) == cplx(0));
    CHECK(f.negative_part() == s);
    CHECK_THROWS_AS(BoundaryFunction(2, std::vector<cplx>(4)), PreconditionError);
}

TEST_CASE("json and csv io") {
    const std::vector<cplx> c{{1.0, 0.0}, {0.25, -3.5}, {0.0, 1e-300}};
    const auto back = io::from_json(io::to_json(c));
    REQUIRE(back.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(back[i] == c[i]);
    CHECK(io::from_json("[1, [0, 2]]")[1] == cplx(0, 2));
    CHECK_THROWS_AS(io::from_json("{\"a\": 1}"), PreconditionError);
    CHECK_THROWS_AS(io::from_json("[[1,2,3]]"), PreconditionError);
    CHECK_THROWS_AS(io::from_json("[1,"), PreconditionError);

    BoundaryFunction f(1, {1.0, 2.0, cplx(0, 3)});
    CHECK(io::fourier_csv(f) == "k,re,im\n-1,1,0\n0,2,0\n1,0,3\n");
}

TEST_CASE("coefficient arithmetic") {
    TaylorSeries a({1.0, 2.0}), b({0.0, 1.0, 1.0});
    CHECK((a + b) == TaylorSeries({1.0, 3.0, 1.0}));
    CHECK((a * b) == TaylorSeries({0.0, 1.0, 3.0, 2.0}));
    CHECK((cplx(0, 1) * a) == TaylorSeries({cplx(0, 1), cplx(0, 2)}));
}

}  // TEST_SUITE
