#pragma once

#include <cstdint>

#include "json.hpp"

#include "zvp/almost_metric.hpp"
#include "zvp/certificate.hpp"
#include "zvp/equilibrium.hpp"
#include "zvp/normal_fn.hpp"
#include "zvp/solver.hpp"
#include "zvp/zhong.hpp"

namespace zvp::io {

using json = nlohmann::json;

/// Finite values as numbers, infinities as "inf" / "-inf".
json number_to_json(double value);
/// Accepts numbers and the strings "inf", "+inf", "-inf". Throws MalformedInput otherwise.
double number_from_json(const json& j, const char* what);

/// Integer literal >= 0, whether stored signed or unsigned.
inline bool is_index(const json& j)
{
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

json table_to_json(const Table& t);
Table table_from_json(const json& j, const char* what);

/// { "kind": "one" | "inv1p" | "invsqrt1p" | "const", "c": real } or
/// { "kind": "table", "samples": [[t, b], ...] }.
NormalFunction normal_from_json(const json& j, double inv_tol = 1e-8);
json normal_to_json(const NormalFunction& f);

/// { "kind": "anchor", "a": int } | { "kind": "infimal", "g": [...] } |
/// { "kind": "explicit", "values": [...] }.
Weight weight_from_json(const json& j, const Table& d);

/// { "phi": [real or "inf", ...] }.
Potential potential_from_json(const json& j);
json potential_to_json(const Potential& phi);

/// { "F": [[real | "inf" | "-inf", ...], ...] }.
Bifunction bifunction_from_json(const json& j);

json to_json(const ValidationReport& report);
json to_json(const Inequality& ineq);
json to_json(const Certificate& cert);
json to_json(const CompatibilityCertificate& cert);

}  // namespace zvp::io
