#pragma once

#include <optional>
#include <vector>

#include "zvp/almost_metric.hpp"
#include "zvp/certificate.hpp"
#include "zvp/solver.hpp"
#include "zvp/tolerances.hpp"
#include "zvp/zhong.hpp"

namespace zvp {

/// Extended-real table F(x,y) in R u {-inf, +inf}. NaN is rejected.
class Bifunction
{
public:
    Bifunction() = default;
    explicit Bifunction(Table values);

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] double operator()(PointId x, PointId y) const { return values_(x, y); }
    [[nodiscard]] const Table& table() const { return values_; }
    [[nodiscard]] bool is_real_valued() const;

private:
    Table values_;
};

/// Exact-zero diagonal and F(x,z) <= F(x,y) + F(y,z) wherever the right-hand
/// sum exists (inf + (-inf) does not).
ValidationReport validate_bifunction(const Bifunction& F, double tol = 1e-9);

/// F(x,y) = phi(y) - phi(x), with inf - inf = 0.
Bifunction potential_to_bifunction(const Potential& phi);

/// mu(x) = sup_y -F(x,y), with Dom(mu) = {x : mu(x) < inf}.
struct Marginal
{
    std::vector<double> values;

    [[nodiscard]] bool in_domain(PointId x) const;
    [[nodiscard]] std::vector<PointId> domain() const;
    [[nodiscard]] bool proper() const { return !domain().empty(); }
};

Marginal marginal(const Bifunction& F);

/// Equilibrium point of G = F + e by descent on F_u = F(u, .).
/// Throws DomainError for u outside Dom(mu), PreconditionError when F is not
/// reflexive-triangular or d, e are not almost metrics on the same space.
Certificate equilibrium_via_e(PointId u, const Bifunction& F, const Table& d, const Table& e,
                              const Tolerances& tol = {}, DescentOptions opts = {});

/// Equilibrium point of G(x,y) = F(x,y) + b(Gamma(x)) d(x,y) through the derived
/// metric. With rho, the premise mu(u) <= B(Gamma(u)+rho) - B(Gamma(u)) is
/// checked (PremiseError) and the radius bounds are certified.
Certificate equilibrium_zhong(PointId u, const Bifunction& F, const ZhongMetric& z,
                              std::optional<double> rho = std::nullopt, const Tolerances& tol = {},
                              DescentOptions opts = {});
Certificate equilibrium_zhong(PointId u, const Bifunction& F, const Table& d,
                              const NormalFunction& f, const Weight& weight,
                              std::optional<double> rho = std::nullopt, const Tolerances& tol = {},
                              DescentOptions opts = {});

/// Real-valued reflexive triangular f: descent on h(x) = f(u,x) over d gives
/// an equilibrium point of g = f + d. Infinite entries throw DomainError.
Certificate bkp_point(PointId u, const Bifunction& f, const Table& d, const Tolerances& tol = {},
                      DescentOptions opts = {});

}  // namespace zvp
