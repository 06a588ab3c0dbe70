#include "zvp/almost_metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zvp/errors.hpp"

namespace zvp {

Table Table::from_rows(const std::vector<std::vector<double>>& rows)
{
    const std::size_t n = rows.size();
    Table table(n);
    for (std::size_t x = 0; x < n; ++x) {
        if (rows[x].size() != n) {
            throw MalformedInput("table is not square: row " + std::to_string(x) + " has " +
                                 std::to_string(rows[x].size()) + " entries, expected " +
                                 std::to_string(n));
        }
        std::copy(rows[x].begin(), rows[x].end(), table.values_.begin() + x * n);
    }
    return table;
}

std::vector<std::vector<double>> Table::rows() const
{
    std::vector<std::vector<double>> out(n_);
    for (std::size_t x = 0; x < n_; ++x) {
        out[x].assign(values_.begin() + x * n_, values_.begin() + (x + 1) * n_);
    }
    return out;
}

namespace {

void require_nonnegative_finite(const Table& table)
{
    const std::size_t n = table.size();
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            const double v = table(x, y);
            if (!std::isfinite(v) || v < 0.0) {
                throw MalformedInput("distance entry (" + std::to_string(x) + "," +
                                     std::to_string(y) + ") must be finite and >= 0");
            }
        }
    }
}

}  // namespace

ValidationReport validate_pseudometric(const Table& table, double tol)
{
    require_nonnegative_finite(table);
    ValidationReport report;
    report.subject = "pseudometric";
    const std::size_t n = table.size();
    for (PointId x = 0; x < n; ++x) {
        if (table(x, x) != 0.0) {
            report.add("reflexive", {x}, table(x, x));
        }
    }
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            for (PointId z = 0; z < n; ++z) {
                const double excess = table(x, z) - (table(x, y) + table(y, z));
                if (excess > tol) {
                    report.add("triangular", {x, y, z}, excess);
                }
            }
        }
    }
    return report;
}

ValidationReport validate_almost_metric(const Table& table, double tol)
{
    ValidationReport report = validate_pseudometric(table, tol);
    report.subject = "almost metric";
    const std::size_t n = table.size();
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            if (x != y && table(x, y) == 0.0) {
                report.add("sufficiency", {x, y}, 0.0);
            }
        }
    }
    return report;
}

Table metric_closure(const Table& raw)
{
    require_nonnegative_finite(raw);
    const std::size_t n = raw.size();
    for (PointId x = 0; x < n; ++x) {
        if (raw(x, x) != 0.0) {
            throw PreconditionError("metric_closure: diagonal entry " + std::to_string(x) +
                                    " is not zero");
        }
        for (PointId y = 0; y < n; ++y) {
            if (x != y && raw(x, y) == 0.0) {
                throw PreconditionError("metric_closure: zero off-diagonal entry (" +
                                        std::to_string(x) + "," + std::to_string(y) +
                                        "), sufficiency cannot be achieved");
            }
        }
    }
    Table closed = raw;
    for (PointId k = 0; k < n; ++k) {
        for (PointId i = 0; i < n; ++i) {
            for (PointId j = 0; j < n; ++j) {
                const double via = closed(i, k) + closed(k, j);
                if (via < closed(i, j)) {
                    closed(i, j) = via;
                }
            }
        }
    }
    return closed;
}

namespace {

void require_points_valid(const Sequence& seq, const Table& e)
{
    if (seq.points.empty()) {
        throw MalformedInput("sequence prefix is empty");
    }
    for (PointId p : seq.points) {
        if (p >= e.size()) {
            throw MalformedInput("sequence point " + std::to_string(p) + " outside space of size " +
                                 std::to_string(e.size()));
        }
    }
}

}  // namespace

StrasyResult is_strasy(const Sequence& seq, const Table& e)
{
    require_points_valid(seq, e);
    StrasyResult result;
    for (std::size_t i = 0; i + 1 < seq.points.size(); ++i) {
        result.partial_sum += e(seq.points[i], seq.points[i + 1]);
    }
    // Past the prefix every consecutive term is e(c,c) = 0, so the series is the prefix sum.
    result.decision = seq.tail == Tail::eventually_constant ? Decision::yes : Decision::undetermined;
    return result;
}

CauchyResult is_cauchy(const Sequence& seq, const Table& e)
{
    require_points_valid(seq, e);
    CauchyResult result;
    const std::size_t len = seq.points.size();
    const std::size_t start = len >= 2 ? std::min(len / 2, len - 2) : 0;
    for (std::size_t p = start; p < len; ++p) {
        for (std::size_t q = p; q < len; ++q) {
            result.max_tail_gap = std::max(result.max_tail_gap, e(seq.points[p], seq.points[q]));
        }
    }
    if (seq.tail == Tail::eventually_constant) {
        result.decision = Decision::yes;
        result.max_tail_gap = e(seq.points.back(), seq.points.back());
    }
    return result;
}

std::vector<PointId> e_limits(const Sequence& seq, const Table& e)
{
    require_points_valid(seq, e);
    if (seq.tail != Tail::eventually_constant) {
        throw UndeterminedError("e-limits of an open prefix are undetermined");
    }
    const PointId c = seq.points.back();
    std::vector<PointId> limits;
    for (PointId x = 0; x < e.size(); ++x) {
        if (e(c, x) == 0.0) {
            limits.push_back(x);
        }
    }
    return limits;
}

}  // namespace zvp
