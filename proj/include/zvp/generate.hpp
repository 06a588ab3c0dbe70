#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zvp/almost_metric.hpp"
#include "zvp/equilibrium.hpp"
#include "zvp/normal_fn.hpp"
#include "zvp/solver.hpp"
#include "zvp/zhong.hpp"

namespace zvp {

/// Seeded generator with platform-independent draws (the standard
/// distributions are implementation-defined; mt19937_64 itself is not).
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform in [0, n).
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * n); }
    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

/// Rounds to the nearest multiple of 2^-20.
double snap_to_grid(double value);

/// Uniform grid-valued off-diagonal entries in [lo, hi], then min-plus closure.
Table random_almost_metric(Rng& rng, std::size_t n, double lo = 0.25, double hi = 8.0);

/// Grid-valued potential on [0, scale]; each entry is +inf with probability
/// inf_probability, except that at least one entry stays finite.
Potential random_potential(Rng& rng, std::size_t n, double scale = 10.0,
                           double inf_probability = 0.1);

Weight random_anchor_weight(Rng& rng, const Table& d);
Weight random_infimal_weight(Rng& rng, const Table& d, double scale = 4.0);

/// F(x,y) = phi(y) - phi(x) + eta(x,y) with eta a closed grid-valued almost
/// metric scaled by eta_scale (0 gives the telescoping bifunction).
Bifunction random_bifunction(Rng& rng, const Potential& phi, double eta_scale = 1.0);

/// The shipped closed-form normal functions: one, inv1p, invsqrt1p, const(2.5).
std::vector<NormalFunction> shipped_normal_functions();

}  // namespace zvp
