#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zvp/errors.hpp"
#include "zvp/scenario.hpp"

using namespace zvp;
using io::json;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = ZVP_FIXTURES;

Report run_fixture(const std::string& name, RunOptions opts = {})
{
    opts.property_samples = 2000;
    return run(load_scenario(kFixtures / name), opts);
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("parse errors are malformed input")
{
    CHECK_THROWS_AS(parse_scenario(json::array()), MalformedInput);
    CHECK_THROWS_AS(parse_scenario(json{{"name", "x"}}), MalformedInput);
    CHECK_THROWS_AS(load_scenario(kFixtures / "malformed.json"), MalformedInput);
    const json base = {{"space", {{"n", 2}, {"d", {{0, 1}, {2, 0}}}}}};
    json j = base;
    j["theorem"] = "nope";
    CHECK_THROWS_AS(parse_scenario(j), MalformedInput);
    j = base;
    j["phi"] = {1, 2, 3};
    CHECK_THROWS_AS(parse_scenario(j), MalformedInput);
    j = base;
    j["u"] = 5;
    CHECK_THROWS_AS(parse_scenario(j), MalformedInput);
    j = base;
    j["theorem"] = "evp";
    CHECK_THROWS_AS(run(parse_scenario(j)), MalformedInput);  // no potential
    j = base;
    j["normal"] = {{"kind", "unknown"}};
    CHECK_THROWS_AS(parse_scenario(j), MalformedInput);
}

TEST_CASE("scenario shapes")
{
    const auto bare = load_scenario(kFixtures / "bare_space.json");
    CHECK(bare.theorem == "validate");
    CHECK(bare.d.size() == 2);
    const auto ref = load_scenario(kFixtures / "space_ref.json");
    CHECK(ref.d == bare.d);
    CHECK(ref.phi->values() == std::vector<double>{2, 0});

    const json inf_phi = {{"space", {{"n", 2}, {"d", {{0, 1}, {2, 0}}}}}, {"phi", {"inf", 0}}};
    CHECK(std::isinf(parse_scenario(inf_phi).phi->values()[0]));
    const json seeded = {{"space", {{"seed", 5}, {"n", 6}}}};
    CHECK(parse_scenario(seeded).d == parse_scenario(seeded).d);
    CHECK(parse_scenario(seeded).d.size() == 6);
}

TEST_CASE("fixture reports")
{
    const auto zvp = run_fixture("two_point_zvp.json");
    CHECK(zvp.passed);
    REQUIRE(zvp.certificate.has_value());
    CHECK(zvp.certificate->v == 1);
    CHECK(zvp.certificate->find("zhong_lower") != nullptr);
    const std::string text = report_to_text(zvp);
    CHECK(text.find("result: PASS") != std::string::npos);
    CHECK(text.find("zhong_upper[0]") != std::string::npos);

    const auto bad = run_fixture("non_triangular.json");
    CHECK_FALSE(bad.passed);
    CHECK(report_to_text(bad).find("triangular") != std::string::npos);

    CHECK(run_fixture("properties_inv1p.json").passed);
    CHECK(run_fixture("two_point_eq_zhong.json").passed);
    CHECK_THROWS_AS(run_fixture("two_point_zvp_local_premise.json"), PremiseError);

    RunOptions override;
    override.theorem = "evp";
    const auto evp = run_fixture("two_point_zvp.json", override);
    CHECK(evp.theorem == "evp");
    CHECK(evp.certificate->find("descent")->lhs == 1.0);
}

TEST_CASE("reports are deterministic")
{
    const auto a = report_to_json(run_fixture("two_point_eq_zhong.json")).dump();
    const auto b = report_to_json(run_fixture("two_point_eq_zhong.json")).dump();
    CHECK(a == b);
    const json j = json::parse(a);
    CHECK(j.at("passed") == true);
    CHECK(j.contains("certificate"));
}

TEST_CASE("generation")
{
    CHECK(generate_scenario(7, 5, 3, "zvp") == generate_scenario(7, 5, 3, "zvp"));
    CHECK(generate_scenario(7, 5, 3, "zvp") != generate_scenario(7, 5, 4, "zvp"));

    const fs::path dir = fs::temp_directory_path() / "zvp_test_scenario_corpus";
    fs::remove_all(dir);
    const auto first = generate_corpus(11, 4, 3, dir / "a", "eq");
    const auto second = generate_corpus(11, 4, 3, dir / "b", "eq");
    REQUIRE(first.size() == 3);
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].filename() == second[i].filename());
        CHECK(slurp(first[i]) == slurp(second[i]));
    }
    fs::remove_all(dir);

    // The singleton instance passes every selector.
    RunOptions opts;
    opts.property_samples = 500;
    for (const auto& theorem : kSelectors) {
        INFO(theorem);
        const auto s = parse_scenario(generate_scenario(0, 1, 0, theorem));
        CHECK(run(s, opts).passed);
    }

    // Every selector passes on a small generated corpus.
    opts.property_samples = 200;
    for (const auto& theorem : kSelectors) {
        for (std::size_t i = 0; i < 8; ++i) {
            INFO(theorem << " #" << i);
            const auto s = parse_scenario(generate_scenario(3, 6, i, theorem));
            CHECK(run(s, opts).passed);
        }
    }
}
