// Command-line front end: validate instances, run theorem checkers, check
// normal-function properties, and generate seeded corpora.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "zvp/errors.hpp"
#include "zvp/scenario.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitPrecondition = 3;

struct Outcome
{
    int code = kExitPass;
    std::string text;
    std::string json;
};

Outcome run_one(const fs::path& path, const zvp::RunOptions& opts)
{
    Outcome out;
    try {
        const auto scenario = zvp::load_scenario(path, opts.tol);
        const auto report = zvp::run(scenario, opts);
        out.text = zvp::report_to_text(report, opts.tol);
        out.json = zvp::report_to_json(report, opts.tol).dump(2) + "\n";
        out.code = report.passed ? kExitPass : kExitCheckFailed;
    } catch (const zvp::MalformedInput& e) {
        out.code = kExitParseError;
        out.text = "error (input): " + std::string(e.what()) + "\n";
    } catch (const zvp::PremiseError& e) {
        out.code = kExitPrecondition;
        out.text = "error (premise): " + std::string(e.what()) + "\n";
    } catch (const zvp::DomainError& e) {
        out.code = kExitPrecondition;
        out.text = "error (domain): " + std::string(e.what()) + "\n";
    } catch (const zvp::Error& e) {
        out.code = kExitPrecondition;
        out.text = "error (precondition): " + std::string(e.what()) + "\n";
    } catch (const zvp::io::json::exception& e) {
        out.code = kExitParseError;
        out.text = "error (input): " + std::string(e.what()) + "\n";
    }
    if (out.json.empty()) {
        out.json = zvp::io::json{{"scenario_path", path.string()},
                                 {"error", out.text},
                                 {"exit_code", out.code},
                                 {"passed", false}}
                       .dump(2) +
                   "\n";
    }
    return out;
}

std::vector<fs::path> collect_scenarios(const fs::path& target)
{
    if (!fs::is_directory(target)) {
        return {target};
    }
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(target)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            paths.push_back(entry.path());
        }
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

int run_scenarios(const fs::path& target, const std::string& out_path, std::size_t jobs,
                  const zvp::RunOptions& opts)
{
    const auto paths = collect_scenarios(target);
    if (paths.empty()) {
        std::cerr << "no scenario files under " << target << "\n";
        return kExitParseError;
    }
    std::vector<Outcome> outcomes(paths.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < paths.size(); i = next++) {
            outcomes[i] = run_one(paths[i], opts);
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }

    const bool many = paths.size() > 1 || fs::is_directory(target);
    if (many && !out_path.empty()) {
        fs::create_directories(out_path);
    }
    int code = kExitPass;
    std::size_t passed = 0;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (many) {
            std::cout << "== " << paths[i].filename().string() << "\n";
        }
        std::cout << outcomes[i].text;
        if (!out_path.empty()) {
            const fs::path dest = many ? fs::path(out_path) / (paths[i].stem().string() + ".report.json")
                                       : fs::path(out_path);
            std::ofstream(dest) << outcomes[i].json;
        }
        code = std::max(code, outcomes[i].code);
        passed += outcomes[i].code == kExitPass ? 1 : 0;
    }
    if (many) {
        std::cout << passed << "/" << paths.size() << " scenarios passed\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Variational-point solver and certificate checker over almost metric spaces"};
    app.require_subcommand(1);

    zvp::RunOptions opts;
    std::string scenario_path;
    std::string out_path;
    std::size_t jobs = 1;
    std::string selection = "exact";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--scenario", scenario_path, "Scenario file or directory of scenarios")
            ->required();
        cmd->add_option("--out", out_path, "JSON report path (directory when running many)");
        cmd->add_option("--jobs", jobs, "Scenario files processed concurrently")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--tol-axiom", opts.tol.axiom, "Inequality tolerance");
        cmd->add_option("--tol-quad", opts.tol.quad, "Quadrature absolute tolerance");
        cmd->add_option("--tol-inv", opts.tol.inv, "Inversion tolerance |B(t) - s|");
        cmd->add_option("--tol-roundtrip", opts.tol.roundtrip, "d -> e -> d recovery tolerance");
        cmd->add_option("--selection", selection, "Descent selection: exact | epsilon")
            ->check(CLI::IsMember({"exact", "epsilon"}));
    };

    auto* validate = app.add_subcommand("validate", "Validate the instances in a scenario");
    add_common(validate);
    auto* solve = app.add_subcommand("solve", "Run the scenario's theorem checker");
    add_common(solve);
    std::string theorem;
    solve->add_option("--theorem", theorem, "Override the scenario's theorem selector")
        ->check(CLI::IsMember(zvp::kSelectors));
    auto* properties = app.add_subcommand("properties", "Normal-function property suite");
    add_common(properties);
    properties->add_option("--samples", opts.property_samples, "Random samples per family");
    properties->add_option("--seed", opts.property_seed, "Sampling seed");

    auto* generate = app.add_subcommand("generate", "Write a seeded corpus of scenarios");
    std::uint64_t seed = 0;
    std::size_t n = 8;
    std::size_t count = 1;
    std::string gen_theorem = "zvp";
    std::string gen_out;
    generate->add_option("--seed", seed, "Corpus seed");
    generate->add_option("--n", n, "Points per instance")->check(CLI::PositiveNumber);
    generate->add_option("--count", count, "Number of instances")->check(CLI::PositiveNumber);
    generate->add_option("--theorem", gen_theorem, "Theorem selector written into scenarios")
        ->check(CLI::IsMember(zvp::kSelectors));
    generate->add_option("--out", gen_out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParseError;
    }

    opts.selection = selection == "epsilon" ? zvp::Selection::epsilon_schedule
                                            : zvp::Selection::exact_argmin;
    if (*generate) {
        try {
            const auto paths = zvp::generate_corpus(seed, n, count, gen_out, gen_theorem);
            std::cout << "wrote " << paths.size() << " scenarios to " << gen_out << "\n";
            return kExitPass;
        } catch (const zvp::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitParseError;
        }
    }
    if (*validate) {
        opts.theorem = "validate";
    } else if (*properties) {
        opts.theorem = "properties";
    } else if (!theorem.empty()) {
        opts.theorem = theorem;
    }
    return run_scenarios(scenario_path, out_path, jobs, opts);
}
