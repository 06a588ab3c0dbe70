#include "zvp/zhong.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zvp/errors.hpp"

namespace zvp {

Weight::Weight(std::vector<double> values) : values_(std::move(values))
{
    for (std::size_t x = 0; x < values_.size(); ++x) {
        if (!std::isfinite(values_[x]) || values_[x] < 0.0) {
            throw MalformedInput("weight entry " + std::to_string(x) + " must be finite and >= 0");
        }
    }
}

Weight weight_from_anchor(const Table& d, PointId a)
{
    if (a >= d.size()) {
        throw DomainError("anchor " + std::to_string(a) + " outside space of size " +
                          std::to_string(d.size()));
    }
    const auto row = d.row(a);
    return Weight(std::vector<double>(row.begin(), row.end()));
}

Weight weight_infimal(const Table& d, std::span<const double> g)
{
    const std::size_t n = d.size();
    if (g.size() != n) {
        throw MalformedInput("infimal weight generator has wrong size");
    }
    for (double v : g) {
        if (std::isnan(v) || v < 0.0) {
            throw MalformedInput("infimal weight generator entries must be >= 0");
        }
    }
    std::vector<double> values(n, std::numeric_limits<double>::infinity());
    for (PointId a = 0; a < n; ++a) {
        for (PointId x = 0; x < n; ++x) {
            values[x] = std::min(values[x], g[a] + d(a, x));
        }
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw PreconditionError("infimal weight generator has no finite entry");
        }
    }
    return Weight(std::move(values));
}

ValidationReport validate_weight(const Weight& weight, const Table& d, double tol)
{
    if (weight.size() != d.size()) {
        throw PreconditionError("weight size " + std::to_string(weight.size()) +
                                " does not match space size " + std::to_string(d.size()));
    }
    ValidationReport report;
    report.subject = "almost nonexpansive weight";
    const std::size_t n = d.size();
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            const double value = weight(x) - weight(y) + d(x, y);
            if (value < -tol) {
                report.add("nonexpansive", {x, y}, -value);
            }
        }
    }
    return report;
}

ZhongMetric build_zhong(Table d, Weight weight, NormalFunction f, const Tolerances& tol)
{
    if (const auto r = validate_almost_metric(d, tol.axiom); !r.passed()) {
        throw PreconditionError("base distance is not an almost metric (" +
                                r.violations.front().axiom + ")");
    }
    if (const auto r = validate_weight(weight, d, tol.axiom); !r.passed()) {
        throw PreconditionError("weight is not almost d-nonexpansive");
    }
    ZhongMetric z;
    const std::size_t n = d.size();
    z.e_ = Table(n);
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            z.e_(x, y) = f.increment(weight(x), d(x, y));
        }
    }
    z.d_ = std::move(d);
    z.weight_ = std::move(weight);
    z.f_ = std::move(f);
    return z;
}

Table recover_d(const ZhongMetric& z)
{
    const std::size_t n = z.size();
    Table d(n);
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            d(x, y) = z.normal().inverse_increment(z.weight()(x), z.table()(x, y));
        }
    }
    return d;
}

ValidationReport lemma2_bounds(const ZhongMetric& z, double tol)
{
    ValidationReport report;
    report.subject = "derived metric bounds";
    const auto& f = z.normal();
    const std::size_t n = z.size();
    for (PointId x = 0; x < n; ++x) {
        const double g = z.weight()(x);
        for (PointId y = 0; y < n; ++y) {
            const double dist = z.base()(x, y);
            const double e = z.table()(x, y);
            const double lower = f.density(g + dist) * dist;
            const double upper = f.density(g) * dist;
            const double cap = f.integral(dist);
            if (lower - e > tol) {
                report.add("sandwich_lower", {x, y}, lower - e);
            }
            if (e - upper > tol) {
                report.add("sandwich_upper", {x, y}, e - upper);
            }
            if (e - cap > tol) {
                report.add("cap", {x, y}, e - cap);
            }
        }
    }
    report.notes.push_back("lower semicontinuity of y -> e(x,y) holds vacuously (finite space)");
    return report;
}

CompatibilityCertificate compatibility_certificate(const ZhongMetric& z,
                                                   std::span<const PointId> prefix, double mu,
                                                   const Tolerances& tol)
{
    if (prefix.empty()) {
        throw MalformedInput("compatibility certificate needs a nonempty prefix");
    }
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
        throw PreconditionError("compatibility bound mu must be finite and >= 0");
    }
    const std::size_t n = z.size();
    for (PointId p : prefix) {
        if (p >= n) {
            throw MalformedInput("prefix point " + std::to_string(p) + " outside space");
        }
    }
    const Table& e = z.table();
    const Table& d = z.base();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        for (std::size_t j = i; j < prefix.size(); ++j) {
            if (e(prefix[i], prefix[j]) > mu + tol.axiom) {
                throw PreconditionError("premise violated: e(x_" + std::to_string(i) + ", x_" +
                                        std::to_string(j) + ") exceeds mu");
            }
        }
    }
    const auto& f = z.normal();
    CompatibilityCertificate cert;
    cert.mu = mu;
    cert.nu = f.inverse_integral(f.integral(z.weight()(prefix[0])) + 2.0 * mu);
    cert.modulus_factor = f.density(cert.nu);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        for (std::size_t j = i; j < prefix.size(); ++j) {
            const PointId xi = prefix[i];
            const PointId xj = prefix[j];
            const std::string tag = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
            cert.checks.push_back(
                less_equal("radius" + tag, z.weight()(xi) + d(xi, xj), cert.nu));
            cert.checks.push_back(
                greater_equal("modulus" + tag, e(xi, xj), cert.modulus_factor * d(xi, xj)));
        }
    }
    return cert;
}

}  // namespace zvp
