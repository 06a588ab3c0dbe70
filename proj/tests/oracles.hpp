#pragma once

// Independent brute-force oracles for the test suites. Nothing here calls the
// library routine it is used to check.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "zvp/almost_metric.hpp"
#include "zvp/generate.hpp"

namespace oracle {

using zvp::PointId;
using zvp::Table;

struct TriangleScan
{
    std::size_t violations = 0;
    double worst_excess = -std::numeric_limits<double>::infinity();
};

/// Plain n^3 scan of d(x,z) - d(x,y) - d(y,z).
inline TriangleScan triangle_scan(const Table& d)
{
    TriangleScan scan;
    const std::size_t n = d.size();
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            for (PointId z = 0; z < n; ++z) {
                const double excess = d(x, z) - d(x, y) - d(y, z);
                scan.worst_excess = std::max(scan.worst_excess, excess);
                if (excess > 1e-9) {
                    ++scan.violations;
                }
            }
        }
    }
    return scan;
}

/// Bellman-Ford style relaxation to a fixed point; independent of the
/// Floyd-Warshall loop order.
inline Table shortest_paths(const Table& raw)
{
    Table dist = raw;
    const std::size_t n = raw.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (PointId s = 0; s < n; ++s) {
            for (PointId a = 0; a < n; ++a) {
                for (PointId b = 0; b < n; ++b) {
                    if (dist(s, a) + raw(a, b) < dist(s, b)) {
                        dist(s, b) = dist(s, a) + raw(a, b);
                        changed = true;
                    }
                }
            }
        }
    }
    return dist;
}

/// Points v with phi(v) finite and no x != v satisfying e(v,x) + phi(x) <= phi(v).
inline std::vector<PointId> maximal_points(const Table& e, const std::vector<double>& phi)
{
    std::vector<PointId> out;
    for (PointId v = 0; v < phi.size(); ++v) {
        if (!std::isfinite(phi[v])) {
            continue;
        }
        bool maximal = true;
        for (PointId x = 0; x < phi.size() && maximal; ++x) {
            if (x != v && e(v, x) + phi[x] <= phi[v]) {
                maximal = false;
            }
        }
        if (maximal) {
            out.push_back(v);
        }
    }
    return out;
}

inline bool contains(const std::vector<PointId>& set, PointId p)
{
    return std::find(set.begin(), set.end(), p) != set.end();
}

}  // namespace oracle
