#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zvp/report.hpp"

namespace zvp {

/// A normal function b: positive, non-increasing on [0, inf), with an integral
/// B(t) = int_0^t b that diverges. Closed forms carry exact B and B^-1;
/// tabulated functions are piecewise linear between samples and constant
/// past the last one.
class NormalFunction
{
public:
    enum class Kind { one, inv1p, invsqrt1p, constant, table };

    static NormalFunction one();
    /// b(t) = 1/(1+t), B(t) = ln(1+t).
    static NormalFunction inv1p();
    /// b(t) = 1/sqrt(1+t), B(t) = 2(sqrt(1+t) - 1).
    static NormalFunction invsqrt1p();
    /// b(t) = c; throws MalformedInput unless c > 0 and finite.
    static NormalFunction constant(double c);
    /// Samples (t, b(t)) with t strictly ascending from 0. Monotonicity and
    /// positivity are not enforced here; check_normality reports them.
    static NormalFunction tabulated(std::vector<std::pair<double, double>> samples,
                                    double inv_tol = 1e-8);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] double c() const { return c_; }
    [[nodiscard]] const std::vector<std::pair<double, double>>& samples() const { return samples_; }
    [[nodiscard]] bool has_closed_form() const { return kind_ != Kind::table; }
    [[nodiscard]] std::string name() const;

    /// b(t). Throws DomainError for t < 0.
    [[nodiscard]] double density(double t) const;
    /// B(t). Throws DomainError for t < 0.
    [[nodiscard]] double integral(double t) const;
    /// B^-1(s). Throws DomainError for s < 0, PreconditionError when B stays
    /// bounded (no bracket found).
    [[nodiscard]] double inverse_integral(double s) const;

    /// B(base + delta) - B(base), evaluated without cancellation for closed forms.
    [[nodiscard]] double increment(double base, double delta) const;
    /// The delta >= 0 with B(base + delta) - B(base) = rise.
    [[nodiscard]] double inverse_increment(double base, double rise) const;

private:
    NormalFunction(Kind kind, double c) : kind_(kind), c_(c) {}

    Kind kind_ = Kind::one;
    double c_ = 1.0;
    double inv_tol_ = 1e-8;
    std::vector<std::pair<double, double>> samples_;
    std::vector<double> cumulative_;  // B at each sample abscissa
};

/// Adaptive Simpson quadrature of fn over [a, b] to absolute tolerance tol.
double adaptive_quadrature(const std::function<double(double)>& fn, double a, double b, double tol);

/// B(t) by adaptive quadrature of the density, independent of any closed form.
double quadrature_integral(const NormalFunction& f, double t, double tol = 1e-10);

/// Solves B(t) = s by bracket doubling then bisection on the strictly
/// increasing B, to |B(t) - s| <= tol. Throws PreconditionError when no
/// bracket is found within max_doublings.
double invert_by_bisection(const NormalFunction& f, double s, double tol = 1e-8,
                           int max_doublings = 1100);

/// |int_p^q b - (q-p) int_0^1 b(p + tau (q-p)) dtau|, both sides by quadrature.
double reparametrization_gap(const NormalFunction& f, double p, double q, double tol = 1e-10);

/// Positivity and monotone decrease of b on an ascending grid; when
/// divergence_bound is given, also checks that B exceeds it somewhere.
ValidationReport check_normality(const NormalFunction& f, const std::vector<double>& grid,
                                 std::optional<double> divergence_bound = std::nullopt);

struct IntegralSample
{
    double t = 0.0;
    double s = 1.0;  // t < s
    double shift = 1.0;
    double lambda = 0.5;
};

/// Mean-value sandwich, almost concavity, concavity, sub-additivity of B and
/// super-additivity of B^-1 on each sample. Margins are tol * max(1, |lhs|, |rhs|).
ValidationReport check_integral_properties(const NormalFunction& f,
                                           const std::vector<IntegralSample>& samples,
                                           double tol = 1e-6);

}  // namespace zvp
