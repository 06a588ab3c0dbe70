#include "zvp/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "zvp/errors.hpp"
#include "zvp/generate.hpp"

namespace zvp {

namespace fs = std::filesystem;
using io::json;

namespace {

json read_json_file(const fs::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw MalformedInput("cannot read " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw MalformedInput(path.string() + ": " + e.what());
    }
}

Table space_from_json(const json& space, const fs::path& base_dir)
{
    if (space.is_string()) {
        return space_from_json(read_json_file(base_dir / space.get<std::string>()), base_dir);
    }
    if (!space.is_object()) {
        throw MalformedInput("space must be an object or a path");
    }
    if (space.contains("d")) {
        Table d = io::table_from_json(space.at("d"), "d");
        if (space.contains("n") &&
            (!io::is_index(space.at("n")) || space.at("n").get<std::size_t>() != d.size())) {
            throw MalformedInput("space \"n\" does not match the size of \"d\"");
        }
        return d;
    }
    if (space.contains("seed") && space.contains("n")) {
        if (!io::is_index(space.at("seed")) || !io::is_index(space.at("n"))) {
            throw MalformedInput("space generator needs unsigned \"seed\" and \"n\"");
        }
        Rng rng(space.at("seed").get<std::uint64_t>());
        return random_almost_metric(rng, space.at("n").get<std::size_t>());
    }
    throw MalformedInput("space needs either \"d\" or \"seed\" and \"n\"");
}

void require_size(std::size_t got, std::size_t n, const char* what)
{
    if (got != n) {
        throw MalformedInput(std::string(what) + " has size " + std::to_string(got) +
                             " but the space has " + std::to_string(n) + " points");
    }
}

}  // namespace

Scenario parse_scenario(const json& j, const fs::path& base_dir, const Tolerances& tol)
{
    if (!j.is_object()) {
        throw MalformedInput("scenario must be a JSON object");
    }
    Scenario s;
    s.source = j;
    s.name = j.value("name", std::string{});
    if (!j.contains("space")) {
        if (!j.contains("d")) {
            throw MalformedInput("scenario has no \"space\"");
        }
        // Bare space file.
        s.d = space_from_json(j, base_dir);
        s.theorem = "validate";
        return s;
    }
    s.d = space_from_json(j.at("space"), base_dir);
    const std::size_t n = s.d.size();
    if (n == 0) {
        throw MalformedInput("space must have at least one point");
    }
    s.theorem = j.value("theorem", std::string("validate"));
    if (std::find(kSelectors.begin(), kSelectors.end(), s.theorem) == kSelectors.end()) {
        throw MalformedInput("unknown theorem selector \"" + s.theorem + "\"");
    }
    if (j.contains("e")) {
        s.e = io::table_from_json(j.at("e"), "e");
        require_size(s.e->size(), n, "e");
    }
    if (j.contains("potential")) {
        s.phi = io::potential_from_json(j.at("potential"));
    } else if (j.contains("phi")) {
        s.phi = io::potential_from_json(j);
    }
    if (s.phi) {
        require_size(s.phi->size(), n, "potential");
    }
    if (j.contains("bifunction")) {
        s.F = io::bifunction_from_json(j.at("bifunction"));
    } else if (j.contains("F")) {
        s.F = io::bifunction_from_json(j);
    }
    if (s.F) {
        require_size(s.F->size(), n, "bifunction");
    }
    if (j.contains("normal")) {
        s.normal = io::normal_from_json(j.at("normal"), tol.inv);
    }
    if (j.contains("weight")) {
        s.weight = io::weight_from_json(j.at("weight"), s.d);
        require_size(s.weight->size(), n, "weight");
    }
    if (j.contains("u")) {
        if (!io::is_index(j.at("u")) || j.at("u").get<std::size_t>() >= n) {
            throw MalformedInput("\"u\" must be a point index below " + std::to_string(n));
        }
        s.u = j.at("u").get<PointId>();
    }
    if (j.contains("rho")) {
        s.rho = io::number_from_json(j.at("rho"), "rho");
    }
    return s;
}

Scenario load_scenario(const fs::path& path, const Tolerances& tol)
{
    return parse_scenario(read_json_file(path), path.parent_path(), tol);
}

namespace {

template <typename T>
const T& need(const std::optional<T>& field, const std::string& theorem, const char* name)
{
    if (!field) {
        throw MalformedInput("theorem \"" + theorem + "\" requires field \"" + name + "\"");
    }
    return *field;
}

Bifunction need_bifunction(const Scenario& s, const std::string& theorem)
{
    if (s.F) {
        return *s.F;
    }
    if (s.phi) {
        return potential_to_bifunction(*s.phi);
    }
    throw MalformedInput("theorem \"" + theorem + "\" requires \"bifunction\" or \"potential\"");
}

void require_space(const Table& d, const Tolerances& tol)
{
    if (const auto r = validate_almost_metric(d, tol.axiom); !r.passed()) {
        throw PreconditionError("space is not an almost metric (" + r.violations.front().axiom +
                                ")");
    }
}

ValidationReport oracle_maximality(const Certificate& cert, const Table& e, const Potential& phi)
{
    ValidationReport r;
    r.subject = "exhaustive maximality oracle";
    const auto maximal = maximal_elements(e, phi);
    if (std::find(maximal.begin(), maximal.end(), cert.v) == maximal.end()) {
        r.add("not_maximal", {cert.v}, 0.0);
    }
    if (!leq(cert.u, cert.v, e, phi)) {
        r.add("not_reachable", {cert.u, cert.v}, 0.0);
    }
    return r;
}

double max_prefix_gap(const Table& e, const std::vector<PointId>& prefix)
{
    double mu = 0.0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        for (std::size_t j = i; j < prefix.size(); ++j) {
            mu = std::max(mu, e(prefix[i], prefix[j]));
        }
    }
    return mu;
}

// Derived-metric suite: almost-metric property, round trip, bounds, compatibility.
void derived_metric_suite(Report& report, const ZhongMetric& z, const Tolerances& tol)
{
    auto triangle = validate_almost_metric(z.table(), tol.axiom);
    triangle.subject = "derived metric e";
    report.validations.push_back(std::move(triangle));

    ValidationReport roundtrip;
    roundtrip.subject = "round trip d -> e -> d";
    const Table back = recover_d(z);
    double worst = 0.0;
    for (PointId x = 0; x < z.size(); ++x) {
        for (PointId y = 0; y < z.size(); ++y) {
            const double err = std::abs(back(x, y) - z.base()(x, y));
            worst = std::max(worst, err);
            if (err > tol.roundtrip) {
                roundtrip.add("recovery", {x, y}, err);
            }
        }
    }
    std::ostringstream note;
    note << "max entry error " << worst;
    roundtrip.notes.push_back(note.str());
    report.validations.push_back(std::move(roundtrip));
    report.validations.push_back(lemma2_bounds(z, tol.axiom));

    const std::size_t n = z.size();
    for (PointId a = 0; a < n; ++a) {
        std::vector<PointId> prefix;
        for (std::size_t k = 0; k < n; ++k) {
            prefix.push_back((a + k) % n);
        }
        const double mu = max_prefix_gap(z.table(), prefix);
        report.compatibility.push_back(compatibility_certificate(z, prefix, mu, tol));
    }
}

ValidationReport normal_function_suite(const NormalFunction& f, const RunOptions& opts)
{
    std::vector<double> grid;
    for (int i = 0; i <= 200; ++i) {
        grid.push_back(0.5 * i);
    }
    ValidationReport report = check_normality(f, grid, 100.0);
    report.subject = "normal function " + f.name();
    if (!report.passed()) {
        return report;  // the remaining checks presume normality
    }

    Rng rng(opts.property_seed);
    std::vector<IntegralSample> samples;
    samples.reserve(opts.property_samples);
    for (std::size_t i = 0; i < opts.property_samples; ++i) {
        double t = rng.uniform(0.0, 100.0);
        double s = rng.uniform(0.0, 100.0);
        if (t > s) {
            std::swap(t, s);
        }
        if (t == s) {
            s = t + 1.0;
        }
        samples.push_back({t, s, rng.uniform(0.0, 100.0), rng.uniform()});
    }
    report.merge(check_integral_properties(f, samples, 1e-6));

    for (std::size_t i = 0; i < 64; ++i) {
        double p = rng.uniform(0.0, 50.0);
        double q = p + rng.uniform(0.01, 50.0);
        const double gap = reparametrization_gap(f, p, q, opts.tol.quad);
        if (gap > 1e-8) {
            report.add("reparametrization", {i}, gap);
        }
    }
    const double anchor_gap = std::abs(quadrature_integral(f, 2.0, opts.tol.quad) - f.integral(2.0));
    if (anchor_gap > 1e-8) {
        report.add("quadrature_anchor", {}, anchor_gap);
    }
    for (std::size_t i = 0; i < 256; ++i) {
        const double t = rng.uniform(0.0, 100.0);
        const double err = std::abs(f.inverse_integral(f.integral(t)) - t);
        if (err > opts.tol.roundtrip) {
            report.add("inverse_roundtrip", {i}, err);
        }
    }
    return report;
}

}  // namespace

Report run(const Scenario& s, const RunOptions& opts)
{
    const Tolerances& tol = opts.tol;
    const DescentOptions descent{opts.selection};
    Report report;
    report.name = s.name;
    report.theorem = opts.theorem.value_or(s.theorem);
    report.scenario = s.source;
    const std::string& th = report.theorem;
    if (std::find(kSelectors.begin(), kSelectors.end(), th) == kSelectors.end()) {
        throw MalformedInput("unknown theorem selector \"" + th + "\"");
    }

    if (th == "validate") {
        auto space = validate_almost_metric(s.d, tol.axiom);
        space.subject = "space d";
        report.validations.push_back(std::move(space));
        if (s.e) {
            auto e = validate_almost_metric(*s.e, tol.axiom);
            e.subject = "metric e";
            report.validations.push_back(std::move(e));
        }
        if (s.weight) {
            report.validations.push_back(validate_weight(*s.weight, s.d, tol.axiom));
        }
        if (s.F) {
            report.validations.push_back(validate_bifunction(*s.F, tol.axiom));
        }
        if (s.normal) {
            std::vector<double> grid;
            for (int i = 0; i <= 200; ++i) {
                grid.push_back(0.5 * i);
            }
            report.validations.push_back(check_normality(*s.normal, grid, 100.0));
        }
        if (s.phi) {
            report.summary.push_back("potential is inf-proper, |Dom| = " +
                                     std::to_string(s.phi->domain().size()));
        }
    } else if (th == "properties") {
        const auto& f = need(s.normal, th, "normal");
        report.validations.push_back(normal_function_suite(f, opts));
        if (s.weight) {
            require_space(s.d, tol);
            derived_metric_suite(report, build_zhong(s.d, *s.weight, f, tol), tol);
        }
    } else if (th == "evp" || th == "evp-local") {
        require_space(s.d, tol);
        const auto& phi = need(s.phi, th, "potential");
        const PointId u = need(s.u, th, "u");
        const Table& e = s.e ? *s.e : s.d;
        if (s.e) {
            require_space(*s.e, tol);
        }
        report.certificate = th == "evp"
                                 ? evp_point(u, e, phi, descent)
                                 : evp_local(u, need(s.rho, th, "rho"), e, phi, descent);
        report.validations.push_back(oracle_maximality(*report.certificate, e, phi));
        report.validations.push_back(prop1_conclusions(report.certificate->v, e, phi, tol.axiom));
    } else if (th == "zvp" || th == "zvp-local") {
        require_space(s.d, tol);
        const auto& phi = need(s.phi, th, "potential");
        const PointId u = need(s.u, th, "u");
        const ZhongMetric z =
            build_zhong(s.d, need(s.weight, th, "weight"), need(s.normal, th, "normal"), tol);
        auto triangle = validate_almost_metric(z.table(), tol.axiom);
        triangle.subject = "derived metric e";
        report.validations.push_back(std::move(triangle));
        report.validations.push_back(lemma2_bounds(z, tol.axiom));
        report.certificate = th == "zvp" ? zvp_point(u, z, phi, tol, descent)
                                         : zvp_local(u, need(s.rho, th, "rho"), z, phi, tol, descent);
        report.validations.push_back(oracle_maximality(*report.certificate, z.table(), phi));
    } else if (th == "eq") {
        const Bifunction F = need_bifunction(s, th);
        const PointId u = need(s.u, th, "u");
        report.certificate = equilibrium_via_e(u, F, s.d, s.e ? *s.e : s.d, tol, descent);
    } else if (th == "eq-zhong") {
        require_space(s.d, tol);
        const Bifunction F = need_bifunction(s, th);
        const PointId u = need(s.u, th, "u");
        const ZhongMetric z =
            build_zhong(s.d, need(s.weight, th, "weight"), need(s.normal, th, "normal"), tol);
        report.certificate = equilibrium_zhong(u, F, z, s.rho, tol, descent);
    } else if (th == "bkp") {
        const Bifunction F = need_bifunction(s, th);
        report.certificate = bkp_point(need(s.u, th, "u"), F, s.d, tol, descent);
    }

    const double cert_tol =
        s.normal && !s.normal->has_closed_form() ? tol.roundtrip : tol.axiom;
    report.certificate_tolerance = cert_tol;
    report.passed = true;
    for (const auto& v : report.validations) {
        report.passed = report.passed && v.passed();
    }
    if (report.certificate) {
        const auto& cert = *report.certificate;
        report.passed = report.passed && cert.passed(cert_tol);
        std::size_t failing = 0;
        for (const auto& ineq : cert.inequalities) {
            failing += ineq.holds(cert_tol) ? 0 : 1;
        }
        report.summary.push_back("v = " + std::to_string(cert.v) + " from u = " +
                                 std::to_string(cert.u));
        report.summary.push_back(std::to_string(cert.inequalities.size()) +
                                 " inequalities checked, " + std::to_string(failing) + " failing");
    }
    for (const auto& c : report.compatibility) {
        report.passed = report.passed && c.passed(cert_tol);
    }
    if (!report.compatibility.empty()) {
        report.summary.push_back(std::to_string(report.compatibility.size()) +
                                 " compatibility certificates");
    }
    return report;
}

json report_to_json(const Report& report, const Tolerances& tol)
{
    json validations = json::array();
    for (const auto& v : report.validations) {
        validations.push_back(io::to_json(v));
    }
    json compatibility = json::array();
    for (const auto& c : report.compatibility) {
        compatibility.push_back(io::to_json(c));
    }
    return {{"name", report.name},
            {"theorem", report.theorem},
            {"scenario", report.scenario},
            {"validations", std::move(validations)},
            {"certificate", report.certificate ? io::to_json(*report.certificate) : json(nullptr)},
            {"compatibility", std::move(compatibility)},
            {"summary", report.summary},
            {"tolerances",
             {{"axiom", tol.axiom},
              {"quad", tol.quad},
              {"inv", tol.inv},
              {"roundtrip", tol.roundtrip}}},
            {"passed", report.passed}};
}

namespace {

std::string format_number(double v)
{
    std::ostringstream out;
    out << std::setprecision(10) << v;
    return out.str();
}

}  // namespace

std::string report_to_text(const Report& report, const Tolerances&)
{
    std::ostringstream out;
    out << "scenario: " << (report.name.empty() ? "(unnamed)" : report.name) << "\n";
    out << "theorem:  " << report.theorem << "\n";
    for (const auto& v : report.validations) {
        out << "check " << v.subject << ": " << (v.passed() ? "pass" : "FAIL") << "\n";
        for (const auto& violation : v.violations) {
            out << "  violation " << violation.axiom << " at (";
            for (std::size_t i = 0; i < violation.witness.size(); ++i) {
                out << (i ? "," : "") << violation.witness[i];
            }
            out << ") magnitude " << format_number(violation.magnitude) << "\n";
        }
    }
    if (report.certificate) {
        const auto& cert = *report.certificate;
        out << "u = " << cert.u << ", v = " << cert.v << ", chain =";
        for (PointId p : cert.chain) {
            out << " " << p;
        }
        out << "\n";
        if (cert.premise) {
            out << "premise " << cert.premise->name << ":";
            for (const auto& [key, value] : cert.premise->values) {
                out << " " << key << "=" << format_number(value);
            }
            out << "\n";
        }
        out << std::left << std::setw(28) << "inequality" << std::setw(4) << "" << std::setw(18)
            << "lhs" << std::setw(18) << "rhs" << std::setw(18) << "slack"
            << "ok\n";
        static constexpr const char* relations[] = {"<=", "<", ">=", ">"};
        for (const auto& ineq : cert.inequalities) {
            out << std::setw(28) << ineq.name << std::setw(4)
                << relations[static_cast<int>(ineq.relation)] << std::setw(18)
                << format_number(ineq.lhs) << std::setw(18) << format_number(ineq.rhs)
                << std::setw(18) << format_number(ineq.slack)
                << (ineq.holds(report.certificate_tolerance) ? "yes" : "NO") << "\n";
        }
        for (const auto& note : cert.notes) {
            out << "note: " << note << "\n";
        }
    }
    for (const auto& line : report.summary) {
        out << line << "\n";
    }
    out << "result: " << (report.passed ? "PASS" : "FAIL") << "\n";
    return out.str();
}

json generate_scenario(std::uint64_t seed, std::size_t n, std::size_t index,
                       const std::string& theorem)
{
    Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    const Table d = random_almost_metric(rng, n);
    const bool real_valued = theorem == "bkp";
    const Potential phi = random_potential(rng, n, 10.0, real_valued ? 0.0 : 0.1);
    const Bifunction F = random_bifunction(rng, phi, rng.bernoulli(0.5) ? 0.5 : 0.0);

    const auto normals = shipped_normal_functions();
    const NormalFunction& f = normals[index % normals.size()];

    json weight_spec;
    Weight weight;
    if (index % 2 == 0) {
        const PointId a = rng.index(n);
        weight_spec = {{"kind", "anchor"}, {"a", a}};
        weight = weight_from_anchor(d, a);
    } else {
        std::vector<double> g(n);
        for (double& v : g) {
            v = snap_to_grid(rng.uniform(0.0, 4.0));
        }
        weight_spec = {{"kind", "infimal"}, {"g", g}};
        weight = weight_infimal(d, g);
    }

    const auto dom = phi.domain();
    const PointId u = dom[rng.index(dom.size())];
    const double excess = phi.excess(u);
    const double needed = std::max(excess, f.inverse_increment(weight(u), excess));
    const double rho = std::ceil(std::ldexp(1.25 * needed + 0.5, 20)) * 0x1.0p-20;

    return {{"name", "corpus-" + std::to_string(seed) + "-" + std::to_string(index)},
            {"theorem", theorem},
            {"space", {{"n", n}, {"d", io::table_to_json(d)}}},
            {"potential", io::potential_to_json(phi)},
            {"bifunction", {{"F", io::table_to_json(F.table())}}},
            {"normal", io::normal_to_json(f)},
            {"weight", weight_spec},
            {"u", u},
            {"rho", rho}};
}

std::vector<fs::path> generate_corpus(std::uint64_t seed, std::size_t n, std::size_t count,
                                      const fs::path& dir, const std::string& theorem)
{
    if (n == 0 || count == 0) {
        throw MalformedInput("generate needs n >= 1 and count >= 1");
    }
    fs::create_directories(dir);
    std::vector<fs::path> paths;
    for (std::size_t i = 0; i < count; ++i) {
        std::ostringstream file;
        file << "scenario_" << std::setw(4) << std::setfill('0') << i << ".json";
        const fs::path path = dir / file.str();
        std::ofstream out(path);
        out << generate_scenario(seed, n, i, theorem).dump(2) << "\n";
        if (!out) {
            throw MalformedInput("cannot write " + path.string());
        }
        paths.push_back(path);
    }
    return paths;
}

}  // namespace zvp
