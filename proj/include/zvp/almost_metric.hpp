#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zvp/report.hpp"

namespace zvp {

/// Dense n x n table of doubles, row-major. Entries may be any double;
/// the validators below decide what a given table is allowed to hold.
class Table
{
public:
    Table() = default;
    explicit Table(std::size_t n, double fill = 0.0) : n_(n), values_(n * n, fill) {}

    /// Throws MalformedInput unless `rows` is square.
    static Table from_rows(const std::vector<std::vector<double>>& rows);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] double operator()(PointId x, PointId y) const { return values_[x * n_ + y]; }
    [[nodiscard]] double& operator()(PointId x, PointId y) { return values_[x * n_ + y]; }
    [[nodiscard]] std::span<const double> row(PointId x) const
    {
        return {values_.data() + x * n_, n_};
    }
    [[nodiscard]] std::vector<std::vector<double>> rows() const;

    bool operator==(const Table&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> values_;
};

/// Triangularity and exact-zero diagonal. Throws MalformedInput for
/// negative, NaN or infinite entries.
ValidationReport validate_pseudometric(const Table& table, double tol = 1e-9);

/// Pseudometric checks plus reflexive sufficiency: e(x,y) = 0 iff x = y.
/// Symmetry is not required.
ValidationReport validate_almost_metric(const Table& table, double tol = 1e-9);

/// Min-plus (all-pairs shortest path) closure of a table with zero diagonal and
/// strictly positive off-diagonal entries. The result is an almost metric.
Table metric_closure(const Table& raw);

enum class Tail { eventually_constant, open };

/// A finite prefix of a sequence in the space. With an eventually-constant
/// tail the last point is understood to repeat forever.
struct Sequence
{
    std::vector<PointId> points;
    Tail tail = Tail::open;
};

enum class Decision { yes, no, undetermined };

struct StrasyResult
{
    Decision decision = Decision::undetermined;
    double partial_sum = 0.0;  // sum of consecutive distances over the prefix
};

struct CauchyResult
{
    Decision decision = Decision::undetermined;
    double max_tail_gap = 0.0;  // max e(x_p, x_q), p <= q, over the last half (at least two points) of the prefix
};

/// Strong asymptoticity: convergence of the series of consecutive distances.
StrasyResult is_strasy(const Sequence& seq, const Table& e);

CauchyResult is_cauchy(const Sequence& seq, const Table& e);

/// All x with e(x_n, x) -> 0. Throws UndeterminedError on an open tail.
std::vector<PointId> e_limits(const Sequence& seq, const Table& e);

}  // namespace zvp
