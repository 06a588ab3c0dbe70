#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace zvp {

using PointId = std::size_t;

struct Violation
{
    std::string axiom;
    std::vector<std::size_t> witness;
    double magnitude = 0.0;
};

/// Outcome of an axiom or property check. Passes iff no violation was recorded.
struct ValidationReport
{
    std::string subject;
    std::vector<Violation> violations;
    std::vector<std::string> notes;

    [[nodiscard]] bool passed() const { return violations.empty(); }

    void add(std::string axiom, std::vector<std::size_t> witness, double magnitude)
    {
        violations.push_back({std::move(axiom), std::move(witness), magnitude});
    }

    void merge(const ValidationReport& other)
    {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }
};

}  // namespace zvp
