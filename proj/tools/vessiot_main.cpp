// Batch driver: vessiot <command> [options]. Exit 0 on success, 1 when the
// computation finds an obstruction or a non-integrable section, 2 on bad input.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vessiot/compatibility.hpp"
#include "vessiot/curvature.hpp"
#include "vessiot/dimensions.hpp"
#include "vessiot/errors.hpp"
#include "vessiot/medolaghi.hpp"
#include "vessiot/report.hpp"
#include "vessiot/structure.hpp"

namespace {

using nlohmann::json;
using namespace vessiot;

struct Options {
    std::string format = "json";
    std::string sample_point;
    std::optional<int> max_order;
    std::string section;
    std::string left;
    std::string right;
    std::string cc;
    int n = 2;
    std::optional<long> f1;
};

struct Outcome {
    json document;
    int status = 0;
};

std::optional<std::map<Symbol, Rational>> parse_point(const std::string& text, int n) {
    if (text.empty()) return std::nullopt;
    std::map<Symbol, Rational> point;
    std::size_t start = 0;
    int index = 1;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (index > n) throw InputError("sample point has more than " + std::to_string(n) + " coordinates");
        Rational value;
        try {
            value = Rational(item);
            value.canonicalize();
        } catch (const std::invalid_argument&) {
            throw InputError("bad sample point coordinate '" + item + "'");
        }
        if (value.get_den() == 0) throw InputError("bad sample point coordinate '" + item + "'");
        point.emplace(Symbol::coordinate(index++), value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (index - 1 != n) throw InputError("sample point needs " + std::to_string(n) + " coordinates");
    return point;
}

int max_order(const Options& opts) {
    if (opts.max_order) return *opts.max_order;
    if (const char* env = std::getenv("VESSIOT_MAX_ORDER")) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(env, &used);
            if (used == std::string(env).size() && v >= 0) return v;
        } catch (const std::exception&) {
        }
        throw InputError(std::string("VESSIOT_MAX_ORDER is not a non-negative integer: ") + env);
    }
    return kDefaultMaxJetOrder;
}

json residuals_of(const StructureReport& r) {
    json out = json::object();
    for (const auto& j : r.jacobi_residuals) out[j.name] = j.value.to_string();
    if (r.residual) out["non_constant_quotient"] = r.residual->to_string();
    return out;
}

Outcome run_compute(const Options& opts) {
    const GeometricSection section = load_section(opts.section);
    const StructureReport report = compute_structure(section);
    Outcome o;
    o.document["inputs"] = {{"section", opts.section}, {"kind", std::string(kind_name(section.kind()))}};
    o.document["result"] = to_json(report);
    o.document["residuals"] = residuals_of(report);
    o.document["verdict"] = report.integrable ? "integrable" : "non-integrable";
    o.status = report.integrable ? 0 : 1;
    return o;
}

Outcome run_equivalence(const Options& opts) {
    const GeometricSection left = load_section(opts.left);
    const GeometricSection right = load_section(opts.right);
    Outcome o;
    o.document["inputs"] = {{"left", opts.left}, {"right", opts.right}};
    o.document["residuals"] = json::object();
    try {
        const EquivalenceVerdict verdict = equivalence_gate(left, right, parse_point(opts.sample_point, left.n()));
        o.document["result"] = to_json(verdict);
        o.document["verdict"] = status_name(verdict.status);
        o.status = verdict.status == EquivalenceVerdict::Status::Obstructed ? 1 : 0;
    } catch (const NotIntegrable& e) {
        o.document["result"] = {{"error", e.what()}};
        o.document["verdict"] = "NotIntegrable";
        o.status = 1;
    }
    return o;
}

Outcome run_dims(const Options& opts) {
    if (opts.n < 1 || opts.n > kMaxDimension) throw InputError("--n must lie in 1.." + std::to_string(kMaxDimension));
    Outcome o;
    o.document["inputs"] = {{"n", opts.n}, {"f1", opts.f1 ? json(*opts.f1) : json(nullptr)}};
    o.document["result"] = to_json(dim_table(opts.n, opts.f1));
    o.document["residuals"] = json::object();
    o.document["verdict"] = "ok";
    return o;
}

Outcome run_check_cc(const Options& opts) {
    const GeometricSection section = load_section(opts.section);
    const auto system = medolaghi_equations(section);
    const auto cc = parse_cc_spec(opts.cc, section.n());
    const int order = max_order(opts);
    const LinearJetEquation residual = check_cc_identity(system, cc, order);
    Outcome o;
    o.document["inputs"] = {{"section", opts.section}, {"cc", opts.cc}, {"max_order", order}};
    json eqs = json::array();
    for (const auto& eq : system) eqs.push_back(eq.to_string());
    o.document["result"] = {{"system", eqs}, {"identity", residual.is_zero()}};
    o.document["residuals"] = {{"cc", to_json(residual)}};
    o.document["verdict"] = residual.is_zero() ? "identity" : "nonzero residual";
    o.status = residual.is_zero() ? 0 : 1;
    return o;
}

Outcome run_curvature(const Options& opts) {
    const GeometricSection section = load_section(opts.section);
    Outcome o;
    o.document["inputs"] = {{"section", opts.section}, {"kind", std::string(kind_name(section.kind()))}};
    if (section.kind() == ObjectKind::Metric2D) {
        const Metric2D g = Metric2D::from_section(section);
        const Connection2D gamma = christoffel(g);
        const StructureReport report = metric_constants(g);
        o.document["result"] = {{"christoffel", to_json(gamma)},
                                {"curvature", to_json(riemann(gamma))},
                                {"structure", to_json(report)}};
        o.document["residuals"] = residuals_of(report);
        o.document["verdict"] = report.integrable ? "integrable" : "non-integrable";
        o.status = report.integrable ? 0 : 1;
    } else if (section.kind() == ObjectKind::Christoffel2D) {
        const CurvatureData data = affine_flatness(Connection2D::from_section(section));
        o.document["result"] = {{"curvature", to_json(data)}};
        o.document["residuals"] = to_json(data)["riemann"];
        o.document["verdict"] = data.is_flat() ? "flat" : "non-flat";
        o.status = data.is_flat() ? 0 : 1;
    } else {
        throw InputError("curvature needs a METRIC_2D or CHRISTOFFEL_2D section");
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vessiot structure equations for geometric objects"};
    app.require_subcommand(1);
    Options opts;
    app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--sample-point", opts.sample_point, "Comma-separated rational coordinates, e.g. 2,3");
    app.add_option("--max-order", opts.max_order, "Maximal jet order (default VESSIOT_MAX_ORDER or 4)")
        ->check(CLI::NonNegativeNumber);

    auto* compute = app.add_subcommand("compute", "Structure constants of a section");
    compute->add_option("--section", opts.section)->required()->check(CLI::ExistingFile);
    auto* equivalence = app.add_subcommand("equivalence", "Necessary conditions for equivalence");
    equivalence->add_option("--left", opts.left)->required()->check(CLI::ExistingFile);
    equivalence->add_option("--right", opts.right)->required()->check(CLI::ExistingFile);
    auto* dims = app.add_subcommand("dims", "Fiber dimension table");
    dims->add_option("--n", opts.n)->required();
    dims->add_option("--f1", opts.f1);
    auto* check_cc = app.add_subcommand("check-cc", "Check a compatibility condition");
    check_cc->add_option("--section", opts.section)->required()->check(CLI::ExistingFile);
    check_cc->add_option("--cc", opts.cc)->required();
    auto* curvature = app.add_subcommand("curvature", "Curvature of a 2D metric or connection");
    curvature->add_option("--section", opts.section)->required()->check(CLI::ExistingFile);

    // Global options are accepted after the subcommand too.
    for (auto* sub : {compute, equivalence, dims, check_cc, curvature}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Outcome outcome;
    std::string command;
    try {
        if (compute->parsed()) {
            command = "compute";
            outcome = run_compute(opts);
        } else if (equivalence->parsed()) {
            command = "equivalence";
            outcome = run_equivalence(opts);
        } else if (dims->parsed()) {
            command = "dims";
            outcome = run_dims(opts);
        } else if (check_cc->parsed()) {
            command = "check-cc";
            outcome = run_check_cc(opts);
        } else {
            command = "curvature";
            outcome = run_curvature(opts);
        }
    } catch (const vessiot::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    outcome.document["command"] = command;
    if (opts.format == "json") {
        std::cout << outcome.document.dump(2) << "\n";
    } else {
        std::cout << render_text(outcome.document);
    }
    return outcome.status;
}
