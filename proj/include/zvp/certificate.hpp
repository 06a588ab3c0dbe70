#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zvp/report.hpp"

namespace zvp {

enum class Relation { le, lt, ge, gt };

/// One checked inequality `lhs REL rhs`. Slack is oriented so that the
/// inequality holds iff slack >= 0 (non-strict) or slack > 0 (strict).
struct Inequality
{
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    Relation relation = Relation::le;
    double slack = 0.0;

    [[nodiscard]] bool strict() const { return relation == Relation::lt || relation == Relation::gt; }

    /// Strict inequalities need slack > 0 exactly; the rest allow -tol.
    [[nodiscard]] bool holds(double tol) const
    {
        return strict() ? slack > 0.0 : slack >= -tol;
    }
};

/// lhs <= rhs with slack rhs - lhs.
inline Inequality less_equal(std::string name, double lhs, double rhs)
{
    return {std::move(name), lhs, rhs, Relation::le, rhs - lhs};
}

/// lhs >= rhs with slack lhs - rhs.
inline Inequality greater_equal(std::string name, double lhs, double rhs)
{
    return {std::move(name), lhs, rhs, Relation::ge, lhs - rhs};
}

/// Inequality whose slack was computed by the caller in a form that matches
/// the comparison actually used by the algorithm.
inline Inequality with_slack(std::string name, double lhs, double rhs, Relation rel, double slack)
{
    return {std::move(name), lhs, rhs, rel, slack};
}

struct PremiseRecord
{
    std::string name;
    std::vector<std::pair<std::string, double>> values;
};

struct Certificate
{
    std::string theorem;
    PointId u = 0;
    PointId v = 0;
    std::vector<PointId> chain;
    std::vector<Inequality> inequalities;
    std::optional<PremiseRecord> premise;
    std::vector<std::string> notes;

    [[nodiscard]] bool passed(double tol) const
    {
        for (const auto& ineq : inequalities) {
            if (!ineq.holds(tol)) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] const Inequality* find(const std::string& name) const
    {
        for (const auto& ineq : inequalities) {
            if (ineq.name == name) {
                return &ineq;
            }
        }
        return nullptr;
    }
};

}  // namespace zvp
