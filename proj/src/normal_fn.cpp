#include "zvp/normal_fn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zvp/errors.hpp"

namespace zvp {

namespace {

void require_nonnegative(double t, const char* what)
{
    if (!(t >= 0.0)) {
        throw DomainError(std::string(what) + " must be >= 0, got " + std::to_string(t));
    }
}

}  // namespace

NormalFunction NormalFunction::one()
{
    return NormalFunction(Kind::one, 1.0);
}

NormalFunction NormalFunction::inv1p()
{
    return NormalFunction(Kind::inv1p, 1.0);
}

NormalFunction NormalFunction::invsqrt1p()
{
    return NormalFunction(Kind::invsqrt1p, 1.0);
}

NormalFunction NormalFunction::constant(double c)
{
    if (!std::isfinite(c) || c <= 0.0) {
        throw MalformedInput("constant normal function needs c > 0, got " + std::to_string(c));
    }
    return NormalFunction(Kind::constant, c);
}

NormalFunction NormalFunction::tabulated(std::vector<std::pair<double, double>> samples,
                                         double inv_tol)
{
    if (samples.empty()) {
        throw MalformedInput("tabulated normal function needs at least one sample");
    }
    if (samples.front().first != 0.0) {
        throw MalformedInput("tabulated normal function must start at t = 0");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto [t, b] = samples[i];
        if (!std::isfinite(t) || !std::isfinite(b)) {
            throw MalformedInput("tabulated normal function has a non-finite sample");
        }
        if (i > 0 && !(t > samples[i - 1].first)) {
            throw MalformedInput("tabulated sample abscissae must be strictly ascending");
        }
    }
    NormalFunction f(Kind::table, 1.0);
    f.inv_tol_ = inv_tol;
    f.samples_ = std::move(samples);
    f.cumulative_.resize(f.samples_.size());
    f.cumulative_[0] = 0.0;
    // Composite trapezoid; exact for the piecewise-linear interpolant.
    for (std::size_t i = 1; i < f.samples_.size(); ++i) {
        const auto [t0, b0] = f.samples_[i - 1];
        const auto [t1, b1] = f.samples_[i];
        f.cumulative_[i] = f.cumulative_[i - 1] + 0.5 * (t1 - t0) * (b0 + b1);
    }
    return f;
}

std::string NormalFunction::name() const
{
    switch (kind_) {
    case Kind::one:
        return "one";
    case Kind::inv1p:
        return "inv1p";
    case Kind::invsqrt1p:
        return "invsqrt1p";
    case Kind::constant:
        return "const";
    case Kind::table:
        return "table";
    }
    return "unknown";
}

double NormalFunction::density(double t) const
{
    require_nonnegative(t, "b argument");
    switch (kind_) {
    case Kind::one:
        return 1.0;
    case Kind::inv1p:
        return 1.0 / (1.0 + t);
    case Kind::invsqrt1p:
        return 1.0 / std::sqrt(1.0 + t);
    case Kind::constant:
        return c_;
    case Kind::table: {
        if (t >= samples_.back().first) {
            return samples_.back().second;
        }
        auto it = std::upper_bound(samples_.begin(), samples_.end(), t,
                                   [](double v, const auto& s) { return v < s.first; });
        const auto [t1, b1] = *it;
        const auto [t0, b0] = *std::prev(it);
        return b0 + (b1 - b0) * (t - t0) / (t1 - t0);
    }
    }
    return 0.0;
}

double NormalFunction::integral(double t) const
{
    require_nonnegative(t, "B argument");
    switch (kind_) {
    case Kind::one:
        return t;
    case Kind::inv1p:
        return std::log1p(t);
    case Kind::invsqrt1p:
        return 2.0 * t / (std::sqrt(1.0 + t) + 1.0);
    case Kind::constant:
        return c_ * t;
    case Kind::table: {
        if (t >= samples_.back().first) {
            return cumulative_.back() + samples_.back().second * (t - samples_.back().first);
        }
        auto it = std::upper_bound(samples_.begin(), samples_.end(), t,
                                   [](double v, const auto& s) { return v < s.first; });
        const std::size_t i = static_cast<std::size_t>(std::prev(it) - samples_.begin());
        const double t0 = samples_[i].first;
        return cumulative_[i] + 0.5 * (t - t0) * (samples_[i].second + density(t));
    }
    }
    return 0.0;
}

double NormalFunction::inverse_integral(double s) const
{
    require_nonnegative(s, "B^-1 argument");
    switch (kind_) {
    case Kind::one:
        return s;
    case Kind::inv1p:
        return std::expm1(s);
    case Kind::invsqrt1p:
        return s + 0.25 * s * s;
    case Kind::constant:
        return s / c_;
    case Kind::table:
        return invert_by_bisection(*this, s, inv_tol_);
    }
    return 0.0;
}

double NormalFunction::increment(double base, double delta) const
{
    require_nonnegative(base, "increment base");
    require_nonnegative(delta, "increment length");
    switch (kind_) {
    case Kind::one:
        return delta;
    case Kind::inv1p:
        return std::log1p(delta / (1.0 + base));
    case Kind::invsqrt1p:
        return 2.0 * delta / (std::sqrt(1.0 + base + delta) + std::sqrt(1.0 + base));
    case Kind::constant:
        return c_ * delta;
    case Kind::table:
        return integral(base + delta) - integral(base);
    }
    return 0.0;
}

double NormalFunction::inverse_increment(double base, double rise) const
{
    require_nonnegative(base, "increment base");
    require_nonnegative(rise, "increment rise");
    switch (kind_) {
    case Kind::one:
        return rise;
    case Kind::inv1p:
        return (1.0 + base) * std::expm1(rise);
    case Kind::invsqrt1p:
        return rise * std::sqrt(1.0 + base) + 0.25 * rise * rise;
    case Kind::constant:
        return rise / c_;
    case Kind::table:
        return std::max(0.0, inverse_integral(integral(base) + rise) - base);
    }
    return 0.0;
}

namespace {

double simpson(double fa, double fm, double fb, double a, double b)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& fn, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = fn(lm);
    const double frm = fn(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(fn, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(fn, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_quadrature(const std::function<double(double)>& fn, double a, double b, double tol)
{
    if (a == b) {
        return 0.0;
    }
    const double fa = fn(a);
    const double fb = fn(b);
    const double fm = fn(0.5 * (a + b));
    return adaptive_simpson(fn, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, 50);
}

double quadrature_integral(const NormalFunction& f, double t, double tol)
{
    require_nonnegative(t, "B argument");
    auto b = [&f](double x) { return f.density(x); };
    if (f.kind() != NormalFunction::Kind::table) {
        return adaptive_quadrature(b, 0.0, t, tol);
    }
    // Split at the knots so each piece is smooth.
    std::vector<double> cuts{0.0};
    for (const auto& [knot, value] : f.samples()) {
        if (knot > 0.0 && knot < t) {
            cuts.push_back(knot);
        }
    }
    cuts.push_back(t);
    double total = 0.0;
    const double piece_tol = tol / static_cast<double>(cuts.size());
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        total += adaptive_quadrature(b, cuts[i - 1], cuts[i], piece_tol);
    }
    return total;
}

double invert_by_bisection(const NormalFunction& f, double s, double tol, int max_doublings)
{
    require_nonnegative(s, "B^-1 argument");
    if (s == 0.0) {
        return 0.0;
    }
    double lo = 0.0;
    double hi = 1.0;
    int doublings = 0;
    while (f.integral(hi) < s) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > max_doublings || !std::isfinite(hi)) {
            throw PreconditionError("B^-1: no bracket for s = " + std::to_string(s) +
                                    "; B appears bounded, b is not a normal function");
        }
    }
    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 4096; ++iter) {
        mid = 0.5 * (lo + hi);
        const double value = f.integral(mid);
        // The bracket must also be narrow: where b is small a tiny residual in B
        // still leaves t far from the root.
        const bool converged = std::abs(value - s) <= tol && hi - lo <= tol;
        if (converged || mid == lo || mid == hi) {
            break;
        }
        if (value < s) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return mid;
}

double reparametrization_gap(const NormalFunction& f, double p, double q, double tol)
{
    if (!(p >= 0.0 && p < q)) {
        throw DomainError("reparametrization check needs 0 <= p < q");
    }
    auto b = [&f](double x) { return f.density(x); };
    const double direct = adaptive_quadrature(b, p, q, tol);
    const double len = q - p;
    auto scaled = [&f, p, len](double tau) { return f.density(p + tau * len); };
    const double unit = adaptive_quadrature(scaled, 0.0, 1.0, tol / len);
    return std::abs(direct - len * unit);
}

ValidationReport check_normality(const NormalFunction& f, const std::vector<double>& grid,
                                 std::optional<double> divergence_bound)
{
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw MalformedInput("normality grid must be sorted ascending");
    }
    ValidationReport report;
    report.subject = "normal function " + f.name();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double value = f.density(grid[i]);
        if (!(value > 0.0)) {
            report.add("positivity", {i}, -value);
        }
        if (i > 0) {
            const double rise = value - f.density(grid[i - 1]);
            if (rise > 0.0) {
                report.add("increasing", {i - 1, i}, rise);
            }
        }
    }
    report.notes.push_back("positivity and decrease certified on " + std::to_string(grid.size()) +
                           " grid points only");
    if (divergence_bound) {
        const double bound = *divergence_bound;
        double t = 1.0;
        int doublings = 0;
        while (f.integral(t) < bound && doublings < 1000) {
            t *= 2.0;
            ++doublings;
        }
        if (f.integral(t) < bound) {
            report.add("divergence", {}, bound - f.integral(t));
        } else {
            report.notes.push_back("divergence certified up to B = " + std::to_string(bound));
        }
    }
    return report;
}

namespace {

double margin(double tol, double a, double b)
{
    return tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

ValidationReport check_integral_properties(const NormalFunction& f,
                                           const std::vector<IntegralSample>& samples, double tol)
{
    ValidationReport report;
    report.subject = "integral properties of " + f.name();
    std::size_t almost_concave_failures = 0;
    std::size_t concave_failures = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& [t, s, shift, lambda] = samples[i];
        if (!(t >= 0.0 && t < s && shift >= 0.0 && lambda >= 0.0 && lambda <= 1.0)) {
            throw MalformedInput("integral property sample " + std::to_string(i) +
                                 " needs 0 <= t < s, shift >= 0, lambda in [0,1]");
        }
        // Mean-value sandwich: b(s) <= (B(s) - B(t)) / (s - t) <= b(t).
        const double slope = f.increment(t, s - t) / (s - t);
        const double b_s = f.density(s);
        const double b_t = f.density(t);
        if (b_s - slope > margin(tol, b_s, slope)) {
            report.add("mean_value_lower", {i}, b_s - slope);
        }
        if (slope - b_t > margin(tol, slope, b_t)) {
            report.add("mean_value_upper", {i}, slope - b_t);
        }
        // Almost concavity: x -> B(x + shift) - B(x) is non-increasing.
        const double far = f.increment(s, shift);
        const double near = f.increment(t, shift);
        if (far - near > margin(tol, far, near)) {
            report.add("almost_concave", {i}, far - near);
            ++almost_concave_failures;
        }
        // Concavity: B(t + lambda (s - t)) >= B(t) + lambda (B(s) - B(t)).
        const double partial = f.increment(t, lambda * (s - t));
        const double chord = lambda * f.increment(t, s - t);
        if (chord - partial > margin(tol, chord, partial)) {
            report.add("concave", {i}, chord - partial);
            ++concave_failures;
        }
        // Sub-additivity of B and super-additivity of B^-1.
        const double joint = f.integral(t + s);
        const double split = f.integral(t) + f.integral(s);
        if (joint - split > margin(tol, joint, split)) {
            report.add("subadditive", {i}, joint - split);
        }
        const double inv_joint = f.inverse_integral(t + s);
        const double inv_split = f.inverse_integral(t) + f.inverse_integral(s);
        if (inv_split - inv_joint > margin(tol, inv_joint, inv_split)) {
            report.add("inverse_superadditive", {i}, inv_split - inv_joint);
        }
    }
    if ((almost_concave_failures == 0) != (concave_failures == 0)) {
        report.notes.push_back("almost concavity and concavity disagree on this sample set");
    }
    report.notes.push_back("checked " + std::to_string(samples.size()) + " samples");
    return report;
}

}  // namespace zvp
