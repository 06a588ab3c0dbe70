#include "zvp/equilibrium.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zvp/errors.hpp"

namespace zvp {

Bifunction::Bifunction(Table values) : values_(std::move(values))
{
    for (PointId x = 0; x < values_.size(); ++x) {
        for (PointId y = 0; y < values_.size(); ++y) {
            if (std::isnan(values_(x, y))) {
                throw MalformedInput("bifunction entry (" + std::to_string(x) + "," +
                                     std::to_string(y) + ") is NaN");
            }
        }
    }
}

bool Bifunction::is_real_valued() const
{
    for (PointId x = 0; x < size(); ++x) {
        for (PointId y = 0; y < size(); ++y) {
            if (!std::isfinite(values_(x, y))) {
                return false;
            }
        }
    }
    return true;
}

ValidationReport validate_bifunction(const Bifunction& F, double tol)
{
    ValidationReport report;
    report.subject = "bifunction";
    const std::size_t n = F.size();
    for (PointId x = 0; x < n; ++x) {
        if (F(x, x) != 0.0) {
            report.add("reflexive", {x}, std::abs(F(x, x)));
        }
    }
    std::size_t skipped = 0;
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            for (PointId z = 0; z < n; ++z) {
                const double a = F(x, y);
                const double b = F(y, z);
                if (std::isinf(a) && std::isinf(b) && a != b) {
                    ++skipped;  // right member does not exist
                    continue;
                }
                const double lhs = F(x, z);
                const double rhs = a + b;
                if (!(lhs <= rhs + tol)) {
                    report.add("triangular", {x, y, z}, lhs - rhs);
                }
            }
        }
    }
    if (skipped > 0) {
        report.notes.push_back(std::to_string(skipped) +
                               " triangle constraints skipped (inf + -inf does not exist)");
    }
    return report;
}

Bifunction potential_to_bifunction(const Potential& phi)
{
    const std::size_t n = phi.size();
    Table values(n);
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            const bool both_infinite = std::isinf(phi(x)) && std::isinf(phi(y));
            values(x, y) = both_infinite ? 0.0 : phi(y) - phi(x);
        }
    }
    return Bifunction(std::move(values));
}

bool Marginal::in_domain(PointId x) const
{
    return x < values.size() && values[x] < std::numeric_limits<double>::infinity();
}

std::vector<PointId> Marginal::domain() const
{
    std::vector<PointId> out;
    for (PointId x = 0; x < values.size(); ++x) {
        if (in_domain(x)) {
            out.push_back(x);
        }
    }
    return out;
}

Marginal marginal(const Bifunction& F)
{
    Marginal mu;
    mu.values.assign(F.size(), -std::numeric_limits<double>::infinity());
    for (PointId x = 0; x < F.size(); ++x) {
        for (PointId y = 0; y < F.size(); ++y) {
            mu.values[x] = std::max(mu.values[x], -F(x, y));
        }
    }
    return mu;
}

namespace {

void require_valid_bifunction(const Bifunction& F, const Tolerances& tol)
{
    if (const auto r = validate_bifunction(F, tol.axiom); !r.passed()) {
        throw PreconditionError("bifunction is not reflexive and triangular (" +
                                r.violations.front().axiom + ")");
    }
}

void require_almost_metric(const Table& t, std::size_t n, const char* what, const Tolerances& tol)
{
    if (t.size() != n) {
        throw PreconditionError(std::string(what) + " has size " + std::to_string(t.size()) +
                                ", expected " + std::to_string(n));
    }
    if (const auto r = validate_almost_metric(t, tol.axiom); !r.passed()) {
        throw PreconditionError(std::string(what) + " is not an almost metric (" +
                                r.violations.front().axiom + ")");
    }
}

Potential row_potential(const Bifunction& F, PointId u)
{
    const auto row = F.table().row(u);
    return Potential(std::vector<double>(row.begin(), row.end()));
}

// e(u,v) <= -F(u,v); e(v,x) > -F(v,x) for x != v; G(v,x) = F(v,x) + e(v,x) >= 0.
void add_equilibrium_checks(Certificate& cert, const Bifunction& F, const Table& e)
{
    const PointId u = cert.u;
    const PointId v = cert.v;
    cert.inequalities.push_back(less_equal("eq_descent", e(u, v), -F(u, v)));
    for (PointId x = 0; x < F.size(); ++x) {
        if (x != v) {
            cert.inequalities.push_back(with_slack(indexed("eq_strict", x), e(v, x), -F(v, x),
                                                   Relation::gt, e(v, x) + F(v, x)));
        }
    }
    for (PointId x = 0; x < F.size(); ++x) {
        cert.inequalities.push_back(greater_equal(indexed("equilibrium", x), F(v, x) + e(v, x), 0.0));
    }
}

}  // namespace

Certificate equilibrium_via_e(PointId u, const Bifunction& F, const Table& d, const Table& e,
                              const Tolerances& tol, DescentOptions opts)
{
    const std::size_t n = F.size();
    require_almost_metric(d, n, "base distance", tol);
    require_almost_metric(e, n, "metric e", tol);
    require_valid_bifunction(F, tol);
    if (u >= n) {
        throw DomainError("point " + std::to_string(u) + " outside space of size " +
                          std::to_string(n));
    }
    const Marginal mu = marginal(F);
    if (!mu.in_domain(u)) {
        throw DomainError("point " + std::to_string(u) + " is outside Dom(mu)");
    }
    Certificate cert = evp_point(u, e, row_potential(F, u), opts);
    cert.theorem = "eq";
    cert.premise = PremiseRecord{"marginal at u", {{"mu_u", mu.values[u]}}};
    add_equilibrium_checks(cert, F, e);
    cert.inequalities.push_back(less_equal("eq_marginal", -F(u, cert.v), mu.values[u]));
    cert.notes.push_back("semi descending completeness holds (finite instance)");
    return cert;
}

Certificate equilibrium_zhong(PointId u, const Bifunction& F, const ZhongMetric& z,
                              std::optional<double> rho, const Tolerances& tol,
                              DescentOptions opts)
{
    const auto& f = z.normal();
    const auto& d = z.base();
    const auto& e = z.table();
    const auto& weight = z.weight();
    std::optional<double> budget;
    if (rho) {
        if (!(*rho > 0.0) || !std::isfinite(*rho)) {
            throw PremiseError("radius rho must be finite and > 0");
        }
        if (u >= F.size()) {
            throw DomainError("point " + std::to_string(u) + " outside space");
        }
        const double mu_u = marginal(F).values[u];
        budget = f.increment(weight(u), *rho);
        if (!(mu_u <= *budget)) {
            throw PremiseError("premise mu(u) <= B(Gamma(u)+rho) - B(Gamma(u)) violated: " +
                               std::to_string(mu_u) + " > " + std::to_string(*budget));
        }
    }
    Certificate cert = equilibrium_via_e(u, F, d, e, tol, opts);
    cert.theorem = "eq-zhong";
    const PointId v = cert.v;
    cert.inequalities.push_back(
        less_equal("zhong_lower", f.density(weight(u) + d(u, v)) * d(u, v), e(u, v)));
    for (PointId x = 0; x < z.size(); ++x) {
        if (x != v) {
            cert.inequalities.push_back(
                greater_equal(indexed("zhong_upper", x), f.density(weight(v)) * d(v, x), e(v, x)));
        }
    }
    for (PointId x = 0; x < z.size(); ++x) {
        cert.inequalities.push_back(greater_equal(indexed("weighted_equilibrium", x),
                                                  F(v, x) + f.density(weight(v)) * d(v, x), 0.0));
    }
    if (rho) {
        cert.premise->name = "marginal within weighted radius";
        cert.premise->values.emplace_back("rho", *rho);
        cert.premise->values.emplace_back("budget", *budget);
        cert.inequalities.push_back(less_equal("local_radius", d(u, v), *rho));
        cert.inequalities.push_back(less_equal("weight_growth", weight(v), weight(u) + *rho));
        cert.inequalities.push_back(
            less_equal("local_descent", f.density(weight(u) + *rho) * d(u, v), -F(u, v)));
        cert.inequalities.push_back(less_equal("nonpositive_value", F(u, v), 0.0));
    }
    return cert;
}

Certificate equilibrium_zhong(PointId u, const Bifunction& F, const Table& d,
                              const NormalFunction& f, const Weight& weight,
                              std::optional<double> rho, const Tolerances& tol,
                              DescentOptions opts)
{
    return equilibrium_zhong(u, F, build_zhong(d, weight, f, tol), rho, tol, opts);
}

Certificate bkp_point(PointId u, const Bifunction& f, const Table& d, const Tolerances& tol,
                      DescentOptions opts)
{
    if (!f.is_real_valued()) {
        throw DomainError("bkp requires a real-valued bifunction");
    }
    const std::size_t n = f.size();
    require_almost_metric(d, n, "base distance", tol);
    require_valid_bifunction(f, tol);
    if (u >= n) {
        throw DomainError("point " + std::to_string(u) + " outside space of size " +
                          std::to_string(n));
    }
    // h(x) = f(u, x); h(u) = 0 by reflexivity.
    Certificate cert = evp_point(u, d, row_potential(f, u), opts);
    cert.theorem = "bkp";
    add_equilibrium_checks(cert, f, d);
    cert.notes.push_back("row-wise lower boundedness holds (finite real table)");
    return cert;
}

}  // namespace zvp
