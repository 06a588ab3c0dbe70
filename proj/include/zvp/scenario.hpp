#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "zvp/io.hpp"
#include "zvp/tolerances.hpp"

namespace zvp {

/// Theorem selectors understood by run().
inline const std::vector<std::string> kSelectors = {
    "evp", "evp-local", "zvp", "zvp-local", "eq", "eq-zhong", "bkp", "validate", "properties"};

struct Scenario
{
    std::string name;
    io::json source;  // echoed verbatim in the report
    std::string theorem;
    Table d;
    std::optional<Table> e;
    std::optional<Potential> phi;
    std::optional<Bifunction> F;
    std::optional<NormalFunction> normal;
    std::optional<Weight> weight;
    std::optional<PointId> u;
    std::optional<double> rho;
};

/// Parses a scenario object. A bare space file ({"n", "d"}) is accepted as a
/// "validate" scenario. Throws MalformedInput on any schema problem, including
/// fields missing for the selected theorem.
Scenario parse_scenario(const io::json& j, const std::filesystem::path& base_dir = ".",
                        const Tolerances& tol = {});
Scenario load_scenario(const std::filesystem::path& path, const Tolerances& tol = {});

struct RunOptions
{
    Tolerances tol;
    std::optional<std::string> theorem;  // overrides the scenario's selector
    std::size_t property_samples = 10000;
    std::uint64_t property_seed = 0;
    Selection selection = Selection::exact_argmin;
};

struct Report
{
    std::string name;
    std::string theorem;
    io::json scenario;
    std::vector<ValidationReport> validations;
    std::optional<Certificate> certificate;
    std::vector<CompatibilityCertificate> compatibility;
    std::vector<std::string> summary;
    double certificate_tolerance = 1e-9;
    bool passed = false;
};

/// Dispatches to the selected operation. Precondition, premise and domain
/// errors propagate as exceptions.
Report run(const Scenario& scenario, const RunOptions& opts = {});

io::json report_to_json(const Report& report, const Tolerances& tol = {});
std::string report_to_text(const Report& report, const Tolerances& tol = {});

/// One seeded random scenario of size n.
io::json generate_scenario(std::uint64_t seed, std::size_t n, std::size_t index,
                           const std::string& theorem);

/// Writes count scenario files into dir; returns their paths in order.
std::vector<std::filesystem::path> generate_corpus(std::uint64_t seed, std::size_t n,
                                                   std::size_t count,
                                                   const std::filesystem::path& dir,
                                                   const std::string& theorem = "zvp");

}  // namespace zvp
