#include "zvp/solver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zvp/errors.hpp"

namespace zvp {

std::string indexed(const std::string& prefix, std::size_t k)
{
    return prefix + "[" + std::to_string(k) + "]";
}

Potential::Potential(std::vector<double> values) : values_(std::move(values))
{
    infimum_ = std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < values_.size(); ++x) {
        const double v = values_[x];
        if (std::isnan(v) || v == -std::numeric_limits<double>::infinity()) {
            throw MalformedInput("potential entry " + std::to_string(x) +
                                 " must be a real number or +inf");
        }
        infimum_ = std::min(infimum_, v);
    }
    if (!std::isfinite(infimum_)) {
        throw PreconditionError("potential is not inf-proper: its domain is empty");
    }
}

bool Potential::in_domain(PointId x) const
{
    return x < values_.size() && std::isfinite(values_[x]);
}

std::vector<PointId> Potential::domain() const
{
    std::vector<PointId> out;
    for (PointId x = 0; x < values_.size(); ++x) {
        if (std::isfinite(values_[x])) {
            out.push_back(x);
        }
    }
    return out;
}

namespace {

void require_same_size(const Table& e, const Potential& phi)
{
    if (e.size() != phi.size()) {
        throw PreconditionError("distance table has size " + std::to_string(e.size()) +
                                " but potential has size " + std::to_string(phi.size()));
    }
}

void require_in_domain(PointId u, const Potential& phi)
{
    if (u >= phi.size()) {
        throw DomainError("point " + std::to_string(u) + " outside space of size " +
                          std::to_string(phi.size()));
    }
    if (!phi.in_domain(u)) {
        throw DomainError("point " + std::to_string(u) + " is outside Dom(phi)");
    }
}

// Strict-maximality slack in the same arithmetic leq() uses.
double maximality_slack(PointId v, PointId x, const Table& e, const Potential& phi)
{
    return (e(v, x) + phi(x)) - phi(v);
}

}  // namespace

bool leq(PointId x, PointId y, const Table& e, const Potential& phi)
{
    return e(x, y) + phi(y) <= phi(x);
}

std::vector<PointId> successor_set(PointId x, const Table& e, const Potential& phi)
{
    require_same_size(e, phi);
    require_in_domain(x, phi);
    std::vector<PointId> out;
    for (PointId y = 0; y < e.size(); ++y) {
        if (y == x || leq(x, y, e, phi)) {
            out.push_back(y);
        }
    }
    return out;
}

std::vector<PointId> maximal_elements(const Table& e, const Potential& phi)
{
    require_same_size(e, phi);
    std::vector<PointId> out;
    for (PointId v : phi.domain()) {
        if (successor_set(v, e, phi).size() == 1) {
            out.push_back(v);
        }
    }
    return out;
}

Certificate evp_point(PointId u, const Table& e, const Potential& phi, DescentOptions opts)
{
    require_same_size(e, phi);
    require_in_domain(u, phi);
    const std::size_t n = e.size();

    Certificate cert;
    cert.theorem = "evp";
    cert.u = u;
    cert.chain.push_back(u);
    PointId current = u;
    for (int step = 0;; ++step) {
        // Strict successors: leq(current, y) with phi strictly lower. For a
        // sufficient e every y != current with leq(current, y) qualifies.
        double best = std::numeric_limits<double>::infinity();
        bool any = false;
        for (PointId y = 0; y < n; ++y) {
            if (y != current && phi(y) < phi(current) && leq(current, y, e, phi)) {
                any = true;
                best = std::min(best, phi(y));
            }
        }
        if (!any) {
            break;
        }
        const double cutoff =
            opts.selection == Selection::exact_argmin ? best : best + std::ldexp(1.0, -step);
        for (PointId y = 0; y < n; ++y) {
            if (y != current && phi(y) < phi(current) && leq(current, y, e, phi) &&
                phi(y) <= cutoff) {
                current = y;
                break;
            }
        }
        cert.chain.push_back(current);
    }
    const PointId v = current;
    cert.v = v;

    for (std::size_t i = 0; i + 1 < cert.chain.size(); ++i) {
        const double before = phi(cert.chain[i]);
        const double after = phi(cert.chain[i + 1]);
        cert.inequalities.push_back(with_slack(indexed(names::chain_decrease, i), after, before,
                                               Relation::lt, before - after));
    }
    cert.inequalities.push_back(with_slack(names::descent, e(u, v), phi(u) - phi(v), Relation::le,
                                           phi(u) - (e(u, v) + phi(v))));
    bool sufficient = true;
    for (PointId x = 0; x < n; ++x) {
        if (x == v) {
            continue;
        }
        const double rhs = phi(v) - phi(x);
        const double slack = maximality_slack(v, x, e, phi);
        if (e(v, x) > 0.0) {
            cert.inequalities.push_back(
                with_slack(indexed(names::maximality, x), e(v, x), rhs, Relation::gt, slack));
        } else {
            sufficient = false;
            cert.inequalities.push_back(
                with_slack(indexed(names::maximality, x), e(v, x), rhs, Relation::ge, slack));
        }
    }
    if (!sufficient) {
        cert.notes.push_back("e is not sufficient at v; strictness asserted only where e(v,x) > 0");
    }
    return cert;
}

Certificate evp_local(PointId u, double rho, const Table& e, const Potential& phi,
                      DescentOptions opts)
{
    require_same_size(e, phi);
    require_in_domain(u, phi);
    const double excess = phi.excess(u);
    if (!(excess <= rho)) {
        throw PremiseError("premise phi(u) - inf phi <= rho violated: " + std::to_string(excess) +
                           " > " + std::to_string(rho));
    }
    Certificate cert = evp_point(u, e, phi, opts);
    cert.theorem = "evp-local";
    cert.premise = PremiseRecord{"excess within radius", {{"rho", rho}, {"excess_u", excess}}};
    cert.inequalities.push_back(less_equal("local_radius", e(u, cert.v), rho));
    cert.inequalities.push_back(greater_equal("local_order", phi(u), phi(cert.v)));
    return cert;
}

ValidationReport prop1_conclusions(PointId v, const Table& e, const Potential& phi, double tol)
{
    require_same_size(e, phi);
    require_in_domain(v, phi);
    ValidationReport report;
    report.subject = "variational point " + std::to_string(v);
    for (PointId x = 0; x < e.size(); ++x) {
        if (leq(v, x, e, phi)) {
            if (phi(x) != phi(v) || e(v, x) != 0.0) {
                report.add("successor_collapse", {v, x},
                           std::max(std::abs(phi(v) - phi(x)), e(v, x)));
            } else if (x != v) {
                report.notes.push_back("non-sufficient witness: e(v," + std::to_string(x) +
                                       ") = 0 with equal potential");
            }
        }
        const double slack = maximality_slack(v, x, e, phi);
        if (slack < -tol) {
            report.add("lower_bound", {v, x}, -slack);
        }
        if (e(v, x) > 0.0 && !(slack > 0.0)) {
            report.add("strict", {v, x}, -slack);
        }
    }
    return report;
}

namespace {

void add_zhong_bounds(Certificate& cert, const ZhongMetric& z)
{
    const auto& f = z.normal();
    const auto& d = z.base();
    const auto& e = z.table();
    const auto& weight = z.weight();
    const PointId u = cert.u;
    const PointId v = cert.v;
    cert.inequalities.push_back(
        less_equal("zhong_lower", f.density(weight(u) + d(u, v)) * d(u, v), e(u, v)));
    for (PointId x = 0; x < z.size(); ++x) {
        if (x != v) {
            cert.inequalities.push_back(
                greater_equal(indexed("zhong_upper", x), f.density(weight(v)) * d(v, x), e(v, x)));
        }
    }
    cert.notes.push_back("derived metric is d-compatible (finite instance)");
}

}  // namespace

Certificate zvp_point(PointId u, const ZhongMetric& z, const Potential& phi, const Tolerances&,
                      DescentOptions opts)
{
    Certificate cert = evp_point(u, z.table(), phi, opts);
    cert.theorem = "zvp";
    add_zhong_bounds(cert, z);
    return cert;
}

Certificate zvp_point(PointId u, const Table& d, const Potential& phi, const NormalFunction& f,
                      const Weight& weight, const Tolerances& tol, DescentOptions opts)
{
    return zvp_point(u, build_zhong(d, weight, f, tol), phi, tol, opts);
}

Certificate zvp_local(PointId u, double rho, const ZhongMetric& z, const Potential& phi,
                      const Tolerances& tol, DescentOptions opts)
{
    require_same_size(z.table(), phi);
    require_in_domain(u, phi);
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw PremiseError("radius rho must be finite and > 0");
    }
    const auto& f = z.normal();
    const double gamma_u = z.weight()(u);
    const double excess = phi.excess(u);
    const double budget = f.increment(gamma_u, rho);
    if (!(excess <= budget)) {
        throw PremiseError("premise phi(u) - inf phi <= B(Gamma(u)+rho) - B(Gamma(u)) violated: " +
                           std::to_string(excess) + " > " + std::to_string(budget));
    }
    Certificate cert = zvp_point(u, z, phi, tol, opts);
    cert.theorem = "zvp-local";
    const PointId v = cert.v;
    const double dist = z.base()(u, v);
    const double bound = f.inverse_increment(gamma_u, excess);
    cert.premise = PremiseRecord{
        "excess within weighted radius",
        {{"rho", rho}, {"excess_u", excess}, {"budget", budget}, {"inverse_bound", bound}}};
    cert.inequalities.push_back(less_equal("radius_via_inverse", dist, bound));
    cert.inequalities.push_back(less_equal("bound_within_rho", bound, rho));
    cert.inequalities.push_back(less_equal("local_radius", dist, rho));
    cert.inequalities.push_back(less_equal("weight_growth", z.weight()(v), gamma_u + rho));
    cert.inequalities.push_back(
        less_equal("local_descent", f.density(gamma_u + rho) * dist, phi(u) - phi(v)));
    cert.inequalities.push_back(greater_equal("local_order", phi(u), phi(v)));
    return cert;
}

Certificate zvp_local(PointId u, double rho, const Table& d, const Potential& phi,
                      const NormalFunction& f, const Weight& weight, const Tolerances& tol,
                      DescentOptions opts)
{
    return zvp_local(u, rho, build_zhong(d, weight, f, tol), phi, tol, opts);
}

}  // namespace zvp
