#pragma once

namespace zvp {

struct Tolerances
{
    double axiom = 1e-9;      // triangle / sandwich / weight inequalities
    double quad = 1e-10;      // absolute tolerance of adaptive quadrature
    double inv = 1e-8;        // |B(t) - s| on numerical inversion
    double roundtrip = 1e-7;  // d -> e -> d recovery
};

}  // namespace zvp
