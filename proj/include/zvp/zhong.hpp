#pragma once

#include <span>
#include <vector>

#include "zvp/almost_metric.hpp"
#include "zvp/certificate.hpp"
#include "zvp/normal_fn.hpp"
#include "zvp/tolerances.hpp"

namespace zvp {

/// Nonnegative point weight. Validity against a base distance
/// (Gamma(x) - Gamma(y) + d(x,y) >= 0) is checked by validate_weight.
class Weight
{
public:
    Weight() = default;
    explicit Weight(std::vector<double> values);

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] double operator()(PointId x) const { return values_[x]; }
    [[nodiscard]] const std::vector<double>& values() const { return values_; }

    bool operator==(const Weight&) const = default;

private:
    std::vector<double> values_;
};

/// Gamma(x) = d(a, x).
Weight weight_from_anchor(const Table& d, PointId a);

/// Gamma(x) = min_a (g(a) + d(a, x)). Entries of g may be +inf (point excluded)
/// but at least one must be finite.
Weight weight_infimal(const Table& d, std::span<const double> g);

ValidationReport validate_weight(const Weight& weight, const Table& d, double tol = 1e-9);

/// The derived almost metric e(x,y) = B(Gamma(x) + d(x,y)) - B(Gamma(x)),
/// materialized as a full table.
class ZhongMetric
{
public:
    [[nodiscard]] const Table& base() const { return d_; }
    [[nodiscard]] const Weight& weight() const { return weight_; }
    [[nodiscard]] const NormalFunction& normal() const { return f_; }
    [[nodiscard]] const Table& table() const { return e_; }
    [[nodiscard]] std::size_t size() const { return d_.size(); }

private:
    friend ZhongMetric build_zhong(Table d, Weight weight, NormalFunction f, const Tolerances& tol);

    Table d_;
    Weight weight_;
    NormalFunction f_ = NormalFunction::one();
    Table e_;
};

/// Throws PreconditionError unless d is an almost metric and the weight is
/// almost d-nonexpansive. The result's triangularity is not assumed; callers
/// check it with validate_almost_metric.
ZhongMetric build_zhong(Table d, Weight weight, NormalFunction f, const Tolerances& tol = {});

/// d(x,y) = B^-1(B(Gamma(x)) + e(x,y)) - Gamma(x).
Table recover_d(const ZhongMetric& z);

/// b(Gamma(x)+d) d <= e <= b(Gamma(x)) d and e <= B(d), entrywise.
ValidationReport lemma2_bounds(const ZhongMetric& z, double tol = 1e-9);

struct CompatibilityCertificate
{
    double mu = 0.0;
    double nu = 0.0;              // B^-1(B(Gamma(x_0)) + 2 mu)
    double modulus_factor = 0.0;  // b(nu): e-gap delta forces d-gap <= delta / b(nu)
    std::vector<Inequality> checks;

    [[nodiscard]] bool passed(double tol) const
    {
        for (const auto& c : checks) {
            if (!c.holds(tol)) {
                return false;
            }
        }
        return true;
    }
};

/// Certifies on a finite prefix that a uniform e-bound mu yields the d-Cauchy
/// modulus: Gamma(x_i) + d(x_i,x_j) <= nu and e(x_i,x_j) >= b(nu) d(x_i,x_j)
/// for all i <= j. Throws PreconditionError if some e(x_i,x_j) > mu.
CompatibilityCertificate compatibility_certificate(const ZhongMetric& z,
                                                   std::span<const PointId> prefix, double mu,
                                                   const Tolerances& tol = {});

}  // namespace zvp
