#include <benchmark/benchmark.h>

#include <memory>

#include "wcauchy/approx.hpp"
#include "wcauchy/random.hpp"
#include "wcauchy/transform.hpp"

using namespace wcauchy;

namespace {

const ConformalMap& poly_map() {
    static const ConformalMap m = ConformalMap::polynomial({1.0, 0.25});
    return m;
}

std::shared_ptr<const MomentSequence> half_power() {
    static const auto ms = std::make_shared<const MomentSequence>(WeightSpec::power(0.5));
    return ms;
}

BergmanElement element(int degree) {
    Rng rng(17);
    return {random_series(rng, degree), half_power(), std::nullopt};
}

}  // namespace

// Moments are cached by MomentSequence, so call the uncached free functions.
static void BM_Moment(benchmark::State& state) {
    const auto w = WeightSpec::power(0.5);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(moment(w, k));
}
BENCHMARK(BM_Moment)->Arg(1)->Arg(16)->Arg(256);

static void BM_InverseMoment(benchmark::State& state) {
    const auto w = WeightSpec::power(-0.5);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(inverse_moment(w, k));
}
BENCHMARK(BM_InverseMoment)->Arg(1)->Arg(16)->Arg(256);

static void BM_NormQuadrature(benchmark::State& state) {
    const int deg = static_cast<int>(state.range(0));
    const auto e = element(deg);
    const auto rule = quad::weighted_disk_rule(deg);
    for (auto _ : state) benchmark::DoNotOptimize(bergman_norm_quadrature(e, rule));
}
BENCHMARK(BM_NormQuadrature)->Arg(4)->Arg(16)->Arg(64);

static void BM_TransformQuadrature(benchmark::State& state) {
    const auto e = element(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cauchy_transform_quadrature(e, poly_map(), cplx(3.0, 0.5)));
}
BENCHMARK(BM_TransformQuadrature)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_TransformExpansion(benchmark::State& state) {
    const auto e = element(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cauchy_transform_expansion(e, poly_map(), cplx(3.0, 0.5)));
}
BENCHMARK(BM_TransformExpansion)->Arg(4)->Arg(16)->Arg(64);

static void BM_BoundaryWindow(benchmark::State& state) {
    const auto e = element(8);
    const CutoffFamily c{CutoffShape::linear_ramp, 16};
    const int window = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            gamma_n_boundary_window(e.series, *e.moments, poly_map(), c, window, BoundaryRoute::expansion));
}
BENCHMARK(BM_BoundaryWindow)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
