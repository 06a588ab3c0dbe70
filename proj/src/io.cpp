#include "zvp/io.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zvp/errors.hpp"

namespace zvp::io {

json number_to_json(double value)
{
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    return value;
}

double number_from_json(const json& j, const char* what)
{
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s == "inf" || s == "+inf") {
            return std::numeric_limits<double>::infinity();
        }
        if (s == "-inf") {
            return -std::numeric_limits<double>::infinity();
        }
    }
    throw MalformedInput(std::string(what) + ": expected a number or \"inf\"/\"-inf\", got " +
                         j.dump());
}

json table_to_json(const Table& t)
{
    json rows = json::array();
    for (PointId x = 0; x < t.size(); ++x) {
        json row = json::array();
        for (double v : t.row(x)) {
            row.push_back(number_to_json(v));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Table table_from_json(const json& j, const char* what)
{
    if (!j.is_array()) {
        throw MalformedInput(std::string(what) + " must be an array of rows");
    }
    std::vector<std::vector<double>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) {
            throw MalformedInput(std::string(what) + " rows must be arrays");
        }
        std::vector<double> values;
        for (const auto& v : row) {
            values.push_back(number_from_json(v, what));
        }
        rows.push_back(std::move(values));
    }
    return Table::from_rows(rows);
}

namespace {

const json& require(const json& j, const char* key, const char* context)
{
    if (!j.is_object() || !j.contains(key)) {
        throw MalformedInput(std::string(context) + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

std::vector<double> numbers_from_json(const json& j, const char* what)
{
    if (!j.is_array()) {
        throw MalformedInput(std::string(what) + " must be an array");
    }
    std::vector<double> out;
    for (const auto& v : j) {
        out.push_back(number_from_json(v, what));
    }
    return out;
}

}  // namespace

NormalFunction normal_from_json(const json& j, double inv_tol)
{
    const auto& kind_json = require(j, "kind", "normal function");
    if (!kind_json.is_string()) {
        throw MalformedInput("normal function kind must be a string");
    }
    const auto kind = kind_json.get<std::string>();
    if (kind == "one") {
        return NormalFunction::one();
    }
    if (kind == "inv1p") {
        return NormalFunction::inv1p();
    }
    if (kind == "invsqrt1p") {
        return NormalFunction::invsqrt1p();
    }
    if (kind == "const") {
        return NormalFunction::constant(number_from_json(require(j, "c", "const normal"), "c"));
    }
    if (kind == "table") {
        std::vector<std::pair<double, double>> samples;
        for (const auto& s : require(j, "samples", "tabulated normal")) {
            if (!s.is_array() || s.size() != 2) {
                throw MalformedInput("tabulated normal samples must be [t, b] pairs");
            }
            samples.emplace_back(number_from_json(s[0], "sample t"),
                                 number_from_json(s[1], "sample b"));
        }
        return NormalFunction::tabulated(std::move(samples), inv_tol);
    }
    throw MalformedInput("unknown normal function kind \"" + kind + "\"");
}

json normal_to_json(const NormalFunction& f)
{
    json j = {{"kind", f.name()}};
    if (f.kind() == NormalFunction::Kind::constant) {
        j["c"] = f.c();
    }
    if (f.kind() == NormalFunction::Kind::table) {
        json samples = json::array();
        for (const auto& [t, b] : f.samples()) {
            samples.push_back({t, b});
        }
        j["samples"] = std::move(samples);
    }
    return j;
}

Weight weight_from_json(const json& j, const Table& d)
{
    const auto& kind_json = require(j, "kind", "weight");
    if (!kind_json.is_string()) {
        throw MalformedInput("weight kind must be a string");
    }
    const auto kind = kind_json.get<std::string>();
    if (kind == "anchor") {
        const auto& a = require(j, "a", "anchor weight");
        if (!is_index(a)) {
            throw MalformedInput("anchor weight \"a\" must be a nonnegative integer");
        }
        const auto anchor = a.get<std::size_t>();
        if (anchor >= d.size()) {
            throw MalformedInput("anchor " + std::to_string(anchor) + " outside space");
        }
        return weight_from_anchor(d, anchor);
    }
    if (kind == "infimal") {
        const auto g = numbers_from_json(require(j, "g", "infimal weight"), "g");
        return weight_infimal(d, g);
    }
    if (kind == "explicit") {
        auto values = numbers_from_json(require(j, "values", "explicit weight"), "weight values");
        if (values.size() != d.size()) {
            throw MalformedInput("explicit weight has " + std::to_string(values.size()) +
                                 " entries, space has " + std::to_string(d.size()));
        }
        return Weight(std::move(values));
    }
    throw MalformedInput("unknown weight kind \"" + kind + "\"");
}

Potential potential_from_json(const json& j)
{
    return Potential(numbers_from_json(require(j, "phi", "potential"), "phi"));
}

json potential_to_json(const Potential& phi)
{
    json values = json::array();
    for (double v : phi.values()) {
        values.push_back(number_to_json(v));
    }
    return {{"phi", std::move(values)}};
}

Bifunction bifunction_from_json(const json& j)
{
    return Bifunction(table_from_json(require(j, "F", "bifunction"), "F"));
}

json to_json(const ValidationReport& report)
{
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"axiom", v.axiom},
                              {"witness", v.witness},
                              {"magnitude", number_to_json(v.magnitude)}});
    }
    return {{"subject", report.subject},
            {"passed", report.passed()},
            {"violations", std::move(violations)},
            {"notes", report.notes}};
}

json to_json(const Inequality& ineq)
{
    static constexpr const char* relations[] = {"<=", "<", ">=", ">"};
    return {{"name", ineq.name},
            {"lhs", number_to_json(ineq.lhs)},
            {"rhs", number_to_json(ineq.rhs)},
            {"relation", relations[static_cast<int>(ineq.relation)]},
            {"slack", number_to_json(ineq.slack)}};
}

json to_json(const Certificate& cert)
{
    json inequalities = json::array();
    for (const auto& ineq : cert.inequalities) {
        inequalities.push_back(to_json(ineq));
    }
    json j = {{"theorem", cert.theorem},
              {"u", cert.u},
              {"v", cert.v},
              {"chain", cert.chain},
              {"inequalities", std::move(inequalities)},
              {"notes", cert.notes}};
    if (cert.premise) {
        json values = json::object();
        for (const auto& [key, value] : cert.premise->values) {
            values[key] = number_to_json(value);
        }
        j["premise"] = {{"name", cert.premise->name}, {"values", std::move(values)}};
    } else {
        j["premise"] = nullptr;
    }
    return j;
}

json to_json(const CompatibilityCertificate& cert)
{
    json checks = json::array();
    for (const auto& c : cert.checks) {
        checks.push_back(to_json(c));
    }
    return {{"mu", cert.mu},
            {"nu", number_to_json(cert.nu)},
            {"modulus_factor", cert.modulus_factor},
            {"checks", std::move(checks)}};
}

}  // namespace zvp::io
