#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wcauchy/conformal.hpp"
#include "wcauchy/errors.hpp"
#include "wcauchy/quadrature.hpp"
#include "wcauchy/random.hpp"
#include "wcauchy/transform.hpp"

using namespace wcauchy;

namespace {

const ConformalMap kPoly = ConformalMap::polynomial({1.0, 0.25});

bool close(cplx a, cplx b, double tol = 1e-14) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_SUITE("conformal") {

TEST_CASE("forward and derivative") {
    CHECK(ConformalMap::identity().forward(cplx(0, 0.5)) == cplx(0, 0.5));
    CHECK(close(kPoly.forward(0.5), 0.5625));
    CHECK(close(ConformalMap::moebius(0.0, 2.0).forward(0.3), 0.6));
    CHECK(ConformalMap::identity().derivative(cplx(0.2, 0.7)) == cplx(1.0));
    CHECK(close(kPoly.derivative(0.5), 1.25));
    CHECK(close(kPoly.derivative(-1.0), 0.5));

    const auto m = ConformalMap::moebius(cplx(0.3, -0.2), cplx(1.5, 0.5));
    const cplx w(0.4, 0.1);
    const double h = 1e-6;
    CHECK(close(m.derivative(w), (m.forward(w + h) - m.forward(w - h)) / (2 * h), 1e-8));
}

TEST_CASE("inverse") {
    CHECK(close(ConformalMap::identity().inverse(cplx(0.3, 0.1)), cplx(0.3, 0.1)));
    CHECK(close(kPoly.inverse(0.5625), 0.5, 1e-12));
    const cplx w1 = kPoly.inverse(1.25);
    CHECK(close(w1, 1.0, 1e-10));
    CHECK(std::abs(kPoly.forward(w1) - 1.25) <= kPoly.newton_tol);
    CHECK_THROWS_AS(kPoly.inverse(3.0), OutsideDomainError);
    CHECK_THROWS_AS(ConformalMap::identity().inverse(1.5), OutsideDomainError);
}

TEST_CASE("inverse roundtrip") {
    Rng rng(2024);
    const ConformalMap maps[] = {kPoly, ConformalMap::polynomial({1.0, cplx(0.1, 0.1), 0.05}),
                                 ConformalMap::moebius(cplx(0.2, 0.3), cplx(0.0, 2.0))};
    for (const auto& m : maps) {
        for (int i = 0; i < 200; ++i) {
            const cplx w = std::polar(0.99 * std::sqrt(rng.uniform()), 2 * M_PI * rng.uniform());
            CHECK(std::abs(m.inverse(m.forward(w)) - w) <= 10 * m.newton_tol);
        }
    }
}

TEST_CASE("boundary parametrization") {
    const auto id = ConformalMap::identity();
    CHECK(close(id.boundary_point(M_PI / 2), cplx(0, 1), 1e-15));
    CHECK(close(id.boundary_tangent(M_PI / 2), -1.0, 1e-15));
    CHECK(close(id.boundary_point(0), 1.0));
    CHECK(close(id.boundary_tangent(0), cplx(0, 1)));
    CHECK(close(kPoly.boundary_point(0), 1.25));
    CHECK(close(kPoly.boundary_tangent(0), cplx(0, 1.5)));
}

TEST_CASE("pullback") {
    const auto id = ConformalMap::identity();
    CHECK(id.pullback(TaylorSeries({1.0})) == TaylorSeries({1.0}));
    CHECK(kPoly.pullback(TaylorSeries({1.0})) == TaylorSeries({1.0, 0.5}));
    CHECK(kPoly.pullback(TaylorSeries({0.0, 1.0})) == TaylorSeries({0.0, 1.0, 0.75, 0.125}));

    // Linearity, exactly at the coefficient level for dyadic data.
    TaylorSeries h1({0.5, 0.25, -1.0}), h2({0.0, 2.0, 0.0, 0.125});
    const cplx lam(2.0, -0.5);
    CHECK(kPoly.pullback(h1 + lam * h2) == kPoly.pullback(h1) + lam * kPoly.pullback(h2));

    PullbackOptions small;
    small.max_degree = 4;
    CHECK_THROWS_AS(kPoly.pullback(TaylorSeries({0.0, 0.0, 0.0, 1.0}), small), TruncationError);
    try {
        kPoly.pullback(TaylorSeries({0.0, 0.0, 0.0, 1.0}), small);
    } catch (const TruncationError& e) {
        CHECK(e.discarded_mass() > 0.0);
    }

    // Möbius with a ≠ 0: compare against pointwise (h∘φ)·φ'.
    const auto m = ConformalMap::moebius(cplx(0.2, 0.1), 1.0);
    const TaylorSeries h({1.0, cplx(0, 1), 0.5});
    const auto p = m.pullback(h);
    for (cplx w : {cplx(0.3, 0.2), cplx(-0.5, 0.1), cplx(0, -0.8)})
        CHECK(close(p(w), h.evaluate_unchecked(m.forward(w)) * m.derivative(w), 1e-12));
}

TEST_CASE("kernel taylor coefficients") {
    const ConformalMap maps[] = {ConformalMap::identity(), kPoly,
                                 ConformalMap::moebius(cplx(0.2, -0.1), cplx(1.0, 1.0))};
    const cplx zeta(2.5, 1.0);
    for (const auto& m : maps) {
        const auto c = m.kernel_taylor(zeta, 60);
        const cplx w(0.3, -0.4);
        cplx series{}, p{1.0};
        for (const auto& cj : c) {
            series += cj * p;
            p *= w;
        }
        CHECK(close(series, m.derivative(w) / (m.forward(w) - zeta), 1e-13));
    }
    CHECK_THROWS_AS(kPoly.kernel_taylor(0.0, 4), DomainError);
}

TEST_CASE("univalence") {
    CHECK(ConformalMap::identity().check_univalent(256).pass);
    const auto r = kPoly.check_univalent();
    CHECK(r.pass);
    CHECK(r.winding_number == 1);
    CHECK(r.min_derivative == doctest::Approx(0.5).epsilon(1e-12));

    const auto bad = ConformalMap::polynomial({1.0, 0.75}).check_univalent();
    CHECK_FALSE(bad.pass);
    CHECK(bad.derivative_zeros_inside == 1);
    CHECK_FALSE(bad.witness.empty());

    CHECK(ConformalMap::moebius(cplx(0.5, 0.0), 2.0).check_univalent().pass);
    CHECK_THROWS_AS(kPoly.check_univalent(100), PreconditionError);
    CHECK_THROWS_AS(ConformalMap::polynomial({0.0, 1.0}), PreconditionError);
    CHECK_THROWS_AS(ConformalMap::moebius(1.0, 1.0), PreconditionError);
}

TEST_CASE("signed distance") {
    const auto id = ConformalMap::identity();
    CHECK(id.signed_distance(2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(id.signed_distance(cplx(0, 0.5)) == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(id.signed_distance(0.9, 0.75) == doctest::Approx(0.15).epsilon(1e-12));
    CHECK(kPoly.signed_distance(3.0) == doctest::Approx(1.75).epsilon(1e-12));
}

TEST_CASE("pullback isometry") {
    Rng rng(99);
    for (auto w : {WeightSpec::constant(), WeightSpec::power(0.5), WeightSpec::power(-0.5)}) {
        auto ms = std::make_shared<const MomentSequence>(w);
        for (int trial = 0; trial < 3; ++trial) {
            const TaylorSeries h = random_series(rng, rng.integer(0, 6));
            const BergmanElement e{kPoly.pullback(h), ms, kPoly};
            const double series = bergman_norm_series(e);
            const auto rule = quad::weighted_disk_rule(h.degree() * 2 + 2);
            // ∬_G |h|² ω(1 - |ψ|) dm, integrating over G through z = φ(w).
            const double direct = std::sqrt(quad::integrate_domain(
                [&](cplx z, const quad::DiskNode& p) { return std::norm(h.evaluate_unchecked(z)) * w(p.rc); },
                kPoly, rule));
            CHECK(direct == doctest::Approx(series).epsilon(1e-6));
        }
    }
}

}  // TEST_SUITE
