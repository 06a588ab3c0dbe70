#include "zvp/generate.hpp"

#include <cmath>
#include <limits>

namespace zvp {

double snap_to_grid(double value)
{
    return std::ldexp(std::nearbyint(std::ldexp(value, 20)), -20);
}

Table random_almost_metric(Rng& rng, std::size_t n, double lo, double hi)
{
    Table raw(n);
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            if (x != y) {
                raw(x, y) = std::max(snap_to_grid(rng.uniform(lo, hi)), 0x1.0p-20);
            }
        }
    }
    return metric_closure(raw);
}

Potential random_potential(Rng& rng, std::size_t n, double scale, double inf_probability)
{
    std::vector<double> values(n);
    const std::size_t keep = rng.index(n);
    for (PointId x = 0; x < n; ++x) {
        values[x] = snap_to_grid(rng.uniform(0.0, scale));
        if (x != keep && rng.bernoulli(inf_probability)) {
            values[x] = std::numeric_limits<double>::infinity();
        }
    }
    return Potential(std::move(values));
}

Weight random_anchor_weight(Rng& rng, const Table& d)
{
    return weight_from_anchor(d, rng.index(d.size()));
}

Weight random_infimal_weight(Rng& rng, const Table& d, double scale)
{
    std::vector<double> g(d.size());
    for (double& v : g) {
        v = snap_to_grid(rng.uniform(0.0, scale));
    }
    return weight_infimal(d, g);
}

Bifunction random_bifunction(Rng& rng, const Potential& phi, double eta_scale)
{
    const std::size_t n = phi.size();
    Table values = potential_to_bifunction(phi).table();
    if (eta_scale <= 0.0) {
        return Bifunction(std::move(values));
    }
    // Scale before closing so eta stays on the grid and exactly triangular.
    const Table eta = random_almost_metric(rng, n, 0.25 * eta_scale, 8.0 * eta_scale);
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            values(x, y) += eta(x, y);
        }
    }
    return Bifunction(std::move(values));
}

std::vector<NormalFunction> shipped_normal_functions()
{
    return {NormalFunction::one(), NormalFunction::inv1p(), NormalFunction::invsqrt1p(),
            NormalFunction::constant(2.5)};
}

}  // namespace zvp
