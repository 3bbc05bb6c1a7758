#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wcauchy/series.hpp"

namespace wcauchy {

/// Seeded generator whose outputs do not depend on the standard library's
/// distribution implementations, so runs reproduce across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    int integer(int lo, int hi) {
        return lo + static_cast<int>(uniform() * (hi - lo + 1));
    }
    cplx complex_in_square(double half_width = 1.0) {
        return {uniform(-half_width, half_width), uniform(-half_width, half_width)};
    }

private:
    std::mt19937_64 engine_;
};

/// Degree-`degree` series with coefficients uniform in the unit square.
inline TaylorSeries random_series(Rng& rng, int degree) {
    std::vector<cplx> c(degree + 1);
    for (auto& x : c) x = rng.complex_in_square();
    return TaylorSeries(std::move(c));
}

}  // namespace wcauchy
