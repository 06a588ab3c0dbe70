#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "zvp/errors.hpp"
#include "zvp/generate.hpp"
#include "zvp/zhong.hpp"

using namespace zvp;

namespace {

const Table kTwoPoint = Table::from_rows({{0, 1}, {2, 0}});

// Closed-form antiderivatives for an independent evaluation of e.
double antiderivative(const NormalFunction& f, double t)
{
    switch (f.kind()) {
    case NormalFunction::Kind::one:
        return t;
    case NormalFunction::Kind::inv1p:
        return std::log(1.0 + t);
    case NormalFunction::Kind::invsqrt1p:
        return 2.0 * (std::sqrt(1.0 + t) - 1.0);
    case NormalFunction::Kind::constant:
        return f.c() * t;
    default:
        return std::nan("");
    }
}

struct Instance
{
    Table d;
    Weight weight;
    NormalFunction f;
};

std::vector<Instance> random_instances(std::uint64_t seed, int count)
{
    Rng rng(seed);
    std::vector<Instance> out;
    const auto fns = shipped_normal_functions();
    for (int i = 0; i < count; ++i) {
        const std::size_t n = 1 + rng.index(12);
        Table d = random_almost_metric(rng, n);
        Weight w = i % 2 == 0 ? random_anchor_weight(rng, d) : random_infimal_weight(rng, d);
        out.push_back({std::move(d), std::move(w), fns[static_cast<std::size_t>(i) % fns.size()]});
    }
    return out;
}

}  // namespace

TEST_CASE("anchor weights")
{
    CHECK(weight_from_anchor(Table::from_rows({{0}}), 0).values() == std::vector<double>{0});
    CHECK(weight_from_anchor(kTwoPoint, 0).values() == std::vector<double>{0, 1});
    CHECK_THROWS_AS(weight_from_anchor(kTwoPoint, 2), DomainError);

    Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        const Table d = random_almost_metric(rng, 1 + rng.index(10));
        const Weight w = weight_from_anchor(d, rng.index(d.size()));
        CHECK(validate_weight(w, d).passed());
    }
}

TEST_CASE("infimal weights")
{
    const double inf = std::numeric_limits<double>::infinity();
    Rng rng(2);
    const Table d = random_almost_metric(rng, 6);
    // Indicator of the anchor reduces to the anchor weight.
    std::vector<double> g(6, inf);
    g[3] = 0.0;
    CHECK(weight_infimal(d, g) == weight_from_anchor(d, 3));
    std::vector<double> big(6, 1e6);
    big[3] = 0.0;
    CHECK(weight_infimal(d, big) == weight_from_anchor(d, 3));
    // g = 0 gives Gamma = 0 (take a = x).
    CHECK(weight_infimal(d, std::vector<double>(6, 0.0)).values() == std::vector<double>(6, 0.0));
    CHECK_THROWS_AS(weight_infimal(d, std::vector<double>(6, inf)), PreconditionError);
    CHECK_THROWS_AS(weight_infimal(d, std::vector<double>(5, 0.0)), MalformedInput);

    for (int i = 0; i < 100; ++i) {
        const Table di = random_almost_metric(rng, 1 + rng.index(10));
        const Weight w = random_infimal_weight(rng, di);
        // Pairwise scan, written out.
        for (PointId x = 0; x < di.size(); ++x) {
            for (PointId y = 0; y < di.size(); ++y) {
                CHECK(w(x) - w(y) + di(x, y) >= -1e-9);
            }
        }
        CHECK(validate_weight(w, di).passed());
    }
}

TEST_CASE("validate_weight")
{
    CHECK(validate_weight(Weight({5, 5}), kTwoPoint).passed());
    CHECK(validate_weight(Weight({0, 1}), kTwoPoint).passed());
    const auto r = validate_weight(Weight({0, 2}), kTwoPoint);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].witness == std::vector<std::size_t>{0, 1});
    CHECK(r.violations[0].magnitude == 1.0);
    CHECK_THROWS_AS(validate_weight(Weight({0}), kTwoPoint), PreconditionError);
    CHECK_THROWS_AS(Weight({-1.0}), MalformedInput);
}

TEST_CASE("build_zhong worked values")
{
    const Weight w({0, 1});
    const auto identity = build_zhong(kTwoPoint, w, NormalFunction::one());
    CHECK(identity.table() == kTwoPoint);

    const auto z = build_zhong(kTwoPoint, w, NormalFunction::inv1p());
    CHECK(std::abs(z.table()(0, 1) - std::log(2.0)) <= 1e-15);
    CHECK(std::abs(z.table()(1, 0) - (std::log(4.0) - std::log(2.0))) <= 1e-15);
    CHECK(z.table()(0, 0) == 0.0);

    const Table single = Table::from_rows({{0}});
    CHECK(build_zhong(single, Weight({0}), NormalFunction::inv1p()).table() == single);

    CHECK_THROWS_AS(build_zhong(Table::from_rows({{0, 0}, {1, 0}}), Weight({0, 0}),
                                NormalFunction::one()),
                    PreconditionError);
    CHECK_THROWS_AS(build_zhong(kTwoPoint, Weight({0, 2}), NormalFunction::one()),
                    PreconditionError);
}

TEST_CASE("derived metric is an almost metric on random instances")
{
    for (const auto& inst : random_instances(41, 400)) {
        const auto z = build_zhong(inst.d, inst.weight, inst.f);
        const auto report = validate_almost_metric(z.table());
        INFO(inst.f.name());
        CHECK(report.passed());
        CHECK(oracle::triangle_scan(z.table()).worst_excess <= 1e-9);
        for (PointId x = 0; x < z.size(); ++x) {
            for (PointId y = 0; y < z.size(); ++y) {
                const double g = inst.weight(x);
                const double direct =
                    antiderivative(inst.f, g + inst.d(x, y)) - antiderivative(inst.f, g);
                CHECK(std::abs(z.table()(x, y) - direct) <= 1e-12 * (1.0 + g + inst.d(x, y)));
            }
        }
    }
}

TEST_CASE("recover_d")
{
    const Weight w({0, 1});
    CHECK(recover_d(build_zhong(kTwoPoint, w, NormalFunction::one())) == kTwoPoint);
    const Table back = recover_d(build_zhong(kTwoPoint, w, NormalFunction::inv1p()));
    CHECK(std::abs(back(0, 1) - 1.0) <= 1e-15);
    CHECK(std::abs(back(1, 0) - 2.0) <= 1e-15);

    double worst = 0.0;
    for (const auto& inst : random_instances(43, 300)) {
        const auto z = build_zhong(inst.d, inst.weight, inst.f);
        const Table r = recover_d(z);
        for (PointId x = 0; x < z.size(); ++x) {
            for (PointId y = 0; y < z.size(); ++y) {
                worst = std::max(worst, std::abs(r(x, y) - inst.d(x, y)));
            }
        }
    }
    CHECK(worst <= 1e-7);
}

TEST_CASE("lemma2 bounds")
{
    const Weight w({0, 1});
    const auto z = build_zhong(kTwoPoint, w, NormalFunction::inv1p());
    const auto& f = z.normal();
    // Sandwich at (0,1): b(1) * 1 <= ln 2 <= b(0) * 1; cap: e(0,1) = B(1).
    CHECK(f.density(0.0 + 1.0) * 1.0 == 0.5);
    CHECK(0.5 <= z.table()(0, 1));
    CHECK(z.table()(0, 1) <= 1.0);
    CHECK(z.table()(0, 1) == doctest::Approx(f.integral(1.0)).epsilon(1e-15));
    CHECK(lemma2_bounds(z).passed());

    const auto identity = build_zhong(kTwoPoint, w, NormalFunction::one());
    CHECK(lemma2_bounds(identity, 0.0).passed());

    for (const auto& inst : random_instances(47, 300)) {
        CHECK(lemma2_bounds(build_zhong(inst.d, inst.weight, inst.f)).passed());
    }
}

TEST_CASE("d-limits are e-limits on decided sequences")
{
    Rng rng(53);
    for (const auto& inst : random_instances(59, 100)) {
        const auto z = build_zhong(inst.d, inst.weight, inst.f);
        Sequence seq{{}, Tail::eventually_constant};
        for (std::size_t k = 0, len = 1 + rng.index(6); k < len; ++k) {
            seq.points.push_back(rng.index(z.size()));
        }
        for (PointId x : e_limits(seq, inst.d)) {
            CHECK(oracle::contains(e_limits(seq, z.table()), x));
        }
    }
}

TEST_CASE("compatibility certificate")
{
    const Weight w({0, 1});
    const auto z = build_zhong(kTwoPoint, w, NormalFunction::inv1p());

    const std::vector<PointId> constant{1, 1, 1};
    CHECK(compatibility_certificate(z, constant, 0.0).passed(1e-9));
    CHECK(compatibility_certificate(z, constant, 3.0).passed(1e-9));

    const std::vector<PointId> pair{0, 1};
    const auto cert = compatibility_certificate(z, pair, std::log(2.0));
    CHECK(cert.nu == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(cert.modulus_factor == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(cert.passed(1e-9));
    CHECK(z.table()(0, 1) >= 0.25 * 1.0);

    CHECK_THROWS_AS(compatibility_certificate(z, pair, 0.1), PreconditionError);

    Rng rng(61);
    std::size_t certified = 0;
    for (const auto& inst : random_instances(67, 300)) {
        const auto zi = build_zhong(inst.d, inst.weight, inst.f);
        std::vector<PointId> prefix;
        for (std::size_t k = 0, len = 1 + rng.index(8); k < len; ++k) {
            prefix.push_back(rng.index(zi.size()));
        }
        double mu = 0.0;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            for (std::size_t j = i; j < prefix.size(); ++j) {
                mu = std::max(mu, zi.table()(prefix[i], prefix[j]));
            }
        }
        certified += compatibility_certificate(zi, prefix, mu).passed(1e-9) ? 1 : 0;
    }
    CHECK(certified == 300);
}
