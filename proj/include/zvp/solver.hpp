#pragma once

#include <vector>

#include "zvp/almost_metric.hpp"
#include "zvp/certificate.hpp"
#include "zvp/normal_fn.hpp"
#include "zvp/tolerances.hpp"
#include "zvp/zhong.hpp"

namespace zvp {

/// Extended-real potential phi: M -> R u {+inf}, inf-proper (some finite
/// value, never -inf or NaN).
class Potential
{
public:
    Potential() = default;
    explicit Potential(std::vector<double> values);

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] double operator()(PointId x) const { return values_[x]; }
    [[nodiscard]] const std::vector<double>& values() const { return values_; }
    [[nodiscard]] double infimum() const { return infimum_; }
    [[nodiscard]] bool in_domain(PointId x) const;
    [[nodiscard]] std::vector<PointId> domain() const;
    /// phi(x) - inf phi.
    [[nodiscard]] double excess(PointId x) const { return values_[x] - infimum_; }

private:
    std::vector<double> values_;
    double infimum_ = 0.0;
};

/// x <= y iff e(x,y) + phi(y) <= phi(x).
[[nodiscard]] bool leq(PointId x, PointId y, const Table& e, const Potential& phi);

/// {y : x <= y}; always contains x. Throws DomainError when phi(x) = +inf.
std::vector<PointId> successor_set(PointId x, const Table& e, const Potential& phi);

/// Points v of Dom(phi) whose successor set is {v}.
std::vector<PointId> maximal_elements(const Table& e, const Potential& phi);

enum class Selection {
    exact_argmin,      // move to the lowest-index argmin of phi over strict successors
    epsilon_schedule,  // move to the first strict successor within 2^-k of that minimum
};

struct DescentOptions
{
    Selection selection = Selection::exact_argmin;
};

/// Ordered descent from u to a maximal element v, with the descent and
/// strict-maximality inequalities recorded. Works for any reflexive e;
/// with a sufficient e the result is maximal in the quasi-order.
Certificate evp_point(PointId u, const Table& e, const Potential& phi, DescentOptions opts = {});

/// As evp_point, with the premise phi(u) - inf phi <= rho checked first
/// (PremiseError otherwise) and e(u,v) <= rho, phi(u) >= phi(v) recorded.
Certificate evp_local(PointId u, double rho, const Table& e, const Potential& phi,
                      DescentOptions opts = {});

/// Checks the pseudometric-level conclusions at a claimed point v:
/// every successor x has phi(x) = phi(v) and e(v,x) = 0; e(v,x) >= phi(v) - phi(x)
/// for all x; strictness wherever e(v,x) > 0.
ValidationReport prop1_conclusions(PointId v, const Table& e, const Potential& phi,
                                   double tol = 1e-9);

Certificate zvp_point(PointId u, const ZhongMetric& z, const Potential& phi,
                      const Tolerances& tol = {}, DescentOptions opts = {});
Certificate zvp_point(PointId u, const Table& d, const Potential& phi, const NormalFunction& f,
                      const Weight& weight, const Tolerances& tol = {}, DescentOptions opts = {});

/// Local form. Premise: phi(u) - inf phi <= B(Gamma(u) + rho) - B(Gamma(u)), rho > 0.
Certificate zvp_local(PointId u, double rho, const ZhongMetric& z, const Potential& phi,
                      const Tolerances& tol = {}, DescentOptions opts = {});
Certificate zvp_local(PointId u, double rho, const Table& d, const Potential& phi,
                      const NormalFunction& f, const Weight& weight, const Tolerances& tol = {},
                      DescentOptions opts = {});

namespace names {
inline constexpr const char* descent = "descent";
inline constexpr const char* maximality = "maximality";
inline constexpr const char* chain_decrease = "chain_decrease";
}  // namespace names

/// "prefix[k]".
std::string indexed(const std::string& prefix, std::size_t k);

}  // namespace zvp
