#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "zvp/almost_metric.hpp"
#include "zvp/errors.hpp"
#include "zvp/generate.hpp"

using namespace zvp;

namespace {

Table T(const std::vector<std::vector<double>>& rows)
{
    return Table::from_rows(rows);
}

bool has_violation(const ValidationReport& r, const std::string& axiom,
                   const std::vector<std::size_t>& witness)
{
    for (const auto& v : r.violations) {
        if (v.axiom == axiom && v.witness == witness) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("validate_pseudometric accepts single point and asymmetric tables")
{
    CHECK(validate_pseudometric(T({{0}})).passed());
    CHECK(validate_almost_metric(T({{0}})).passed());
    const Table asym = T({{0, 1}, {2, 0}});
    CHECK(validate_pseudometric(asym).passed());
    CHECK(validate_almost_metric(asym).passed());
    CHECK(oracle::triangle_scan(asym).violations == 0);
}

TEST_CASE("sufficiency violation is reported at the zero entry")
{
    const auto r = validate_almost_metric(T({{0, 1}, {0, 0}}));
    CHECK_FALSE(r.passed());
    CHECK(has_violation(r, "sufficiency", {1, 0}));
    CHECK(r.violations.size() == 1);
    // As a plain pseudometric the same table is fine.
    CHECK(validate_pseudometric(T({{0, 1}, {0, 0}})).passed());
}

TEST_CASE("two-point tables have no non-trivial triangles")
{
    // Triple enumeration oracle: every triangle on two points uses an endpoint
    // as the intermediate, so any nonnegative zero-diagonal table passes.
    for (const auto& rows : {std::vector<std::vector<double>>{{0, 5}, {1, 0}},
                             std::vector<std::vector<double>>{{0, 3}, {1, 0}}}) {
        const Table t = T(rows);
        CHECK(oracle::triangle_scan(t).violations == 0);
        CHECK(validate_almost_metric(t).passed());
    }
}

TEST_CASE("triangular and reflexive violations")
{
    const Table bad = T({{0, 5, 1}, {1, 0, 1}, {1, 1, 0}});
    const auto r = validate_pseudometric(bad);
    CHECK(has_violation(r, "triangular", {0, 2, 1}));
    CHECK(r.violations.size() == oracle::triangle_scan(bad).violations);
    for (const auto& v : r.violations) {
        if (v.witness == std::vector<std::size_t>{0, 2, 1}) {
            CHECK(v.magnitude == doctest::Approx(3.0));
        }
    }
    const auto diag = validate_pseudometric(T({{0.5, 1}, {1, 0}}));
    CHECK(has_violation(diag, "reflexive", {0}));
}

TEST_CASE("malformed tables are rejected")
{
    CHECK_THROWS_AS(Table::from_rows({{0, 1}, {1}}), MalformedInput);
    CHECK_THROWS_AS(validate_pseudometric(T({{0, -1}, {1, 0}})), MalformedInput);
    CHECK_THROWS_AS(validate_pseudometric(T({{0, std::nan("")}, {1, 0}})), MalformedInput);
    CHECK_THROWS_AS(validate_almost_metric(T({{0, std::numeric_limits<double>::infinity()}, {1, 0}})),
                    MalformedInput);
}

TEST_CASE("metric_closure examples")
{
    const Table raw = T({{0, 3, 1}, {9, 0, 9}, {9, 1, 0}});
    const Table closed = metric_closure(raw);
    CHECK(closed == oracle::shortest_paths(raw));
    CHECK(closed(0, 1) == 2.0);
    CHECK(closed == T({{0, 2, 1}, {9, 0, 9}, {9, 1, 0}}));
    CHECK(metric_closure(closed) == closed);

    const Table two = T({{0, 7}, {0.5, 0}});
    CHECK(metric_closure(two) == two);

    CHECK_THROWS_AS(metric_closure(T({{0, 0}, {1, 0}})), PreconditionError);
    CHECK_THROWS_AS(metric_closure(T({{1, 1}, {1, 0}})), PreconditionError);
}

TEST_CASE("metric_closure property: closed, sufficient, equals shortest paths")
{
    Rng rng(20240601);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.index(9);
        Table raw(n);
        for (PointId x = 0; x < n; ++x) {
            for (PointId y = 0; y < n; ++y) {
                if (x != y) {
                    raw(x, y) = snap_to_grid(rng.uniform(0.01, 20.0));
                }
            }
        }
        const Table closed = metric_closure(raw);
        CHECK(validate_almost_metric(closed).passed());
        CHECK(closed == oracle::shortest_paths(raw));
        CHECK(oracle::triangle_scan(closed).worst_excess <= 1e-9);
        for (PointId x = 0; x < n; ++x) {
            for (PointId y = 0; y < n; ++y) {
                CHECK(closed(x, y) <= raw(x, y));
            }
        }
    }
}

TEST_CASE("generated corpus contains asymmetric tables")
{
    Rng rng(7);
    std::size_t asymmetric = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const Table d = random_almost_metric(rng, 6);
        for (PointId x = 0; x < 6; ++x) {
            for (PointId y = 0; y < x; ++y) {
                asymmetric += d(x, y) != d(y, x) ? 1 : 0;
            }
        }
    }
    CHECK(asymmetric > 0);
}

TEST_CASE("strongly asymptotic sequences")
{
    const Table e = T({{0, 1}, {2, 0}});
    const auto constant = is_strasy({{0, 0, 0}, Tail::eventually_constant}, e);
    CHECK(constant.decision == Decision::yes);
    CHECK(constant.partial_sum == 0.0);

    const auto settling = is_strasy({{0, 1, 1, 1}, Tail::eventually_constant}, e);
    CHECK(settling.decision == Decision::yes);
    CHECK(settling.partial_sum == 1.0);

    const auto open = is_strasy({{0, 1, 0, 1}, Tail::open}, e);
    CHECK(open.decision == Decision::undetermined);
    CHECK(open.partial_sum == 1.0 + 2.0 + 1.0);
}

TEST_CASE("Cauchy diagnostics")
{
    const Table e = T({{0, 1}, {2, 0}});
    CHECK(is_cauchy({{1, 1}, Tail::eventually_constant}, e).decision == Decision::yes);
    CHECK(is_cauchy({{0, 1, 0, 1, 1}, Tail::eventually_constant}, e).decision == Decision::yes);

    const Table unit = T({{0, 1}, {1, 0}});
    const auto open = is_cauchy({{0, 1, 0, 1}, Tail::open}, unit);
    CHECK(open.decision == Decision::undetermined);
    CHECK(open.max_tail_gap == 1.0);
}

TEST_CASE("strasy implies Cauchy on decided sequences")
{
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.index(6);
        const Table e = random_almost_metric(rng, n);
        Sequence seq{{}, Tail::eventually_constant};
        for (std::size_t k = 0, len = 1 + rng.index(8); k < len; ++k) {
            seq.points.push_back(rng.index(n));
        }
        if (is_strasy(seq, e).decision == Decision::yes) {
            CHECK(is_cauchy(seq, e).decision == Decision::yes);
        }
    }
}

TEST_CASE("e-limits")
{
    const Table e = T({{0, 1}, {2, 0}});
    CHECK(e_limits({{0, 1}, Tail::eventually_constant}, e) == std::vector<PointId>{1});
    CHECK(e_limits({{1, 0}, Tail::eventually_constant}, e) == std::vector<PointId>{0});

    // Degenerate pseudometric: e(0,1) = 0 with 0 != 1.
    const Table degenerate = T({{0, 0, 3}, {1, 0, 3}, {1, 1, 0}});
    CHECK(validate_pseudometric(degenerate).passed());
    CHECK(e_limits({{2, 0}, Tail::eventually_constant}, degenerate) == std::vector<PointId>{0, 1});

    CHECK_THROWS_AS(e_limits({{0, 1}, Tail::open}, e), UndeterminedError);
}

// Convergent but not Cauchy under an asymmetric almost metric. Points are
// x_1..x_N (indices 0..N-1) and p (index N):
//   d(x_k, p) = 1/k,  d(p, x_k) = 1,  d(x_j, x_k) = 1 for j != k.
// Along x_1, x_2, ... the distance to p tends to 0, yet consecutive terms stay
// at distance 1, so the sequence is never Cauchy.
TEST_CASE("fixture: convergence without Cauchy under asymmetry")
{
    for (std::size_t N : {2, 5, 12, 30}) {
        Table d(N + 1, 1.0);
        for (PointId k = 0; k <= N; ++k) {
            d(k, k) = 0.0;
        }
        for (PointId k = 0; k < N; ++k) {
            d(k, N) = 1.0 / static_cast<double>(k + 1);
        }
        CHECK(validate_almost_metric(d).passed());

        Sequence prefix{{}, Tail::open};
        for (PointId k = 0; k < N; ++k) {
            prefix.points.push_back(k);
        }
        for (PointId k = 1; k < N; ++k) {
            CHECK(d(k, N) < d(k - 1, N));
        }
        CHECK(d(N - 1, N) == doctest::Approx(1.0 / static_cast<double>(N)));
        const auto cauchy = is_cauchy(prefix, d);
        CHECK(cauchy.decision == Decision::undetermined);
        CHECK(cauchy.max_tail_gap == 1.0);
        CHECK(d(N, N - 1) == 1.0);  // the reverse direction does not converge
    }
}
