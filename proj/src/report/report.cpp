#include "vessiot/report.hpp"

namespace vessiot {
namespace {

using nlohmann::json;

json named(const std::vector<NamedExpression>& values) {
    json out = json::object();
    for (const auto& v : values) out[v.name] = v.value.to_string();
    return out;
}

std::string index_name(int a, int b) { return std::to_string(a) + std::to_string(b); }

json matrix(const std::array<std::array<Expression, 2>, 2>& m) {
    json out = json::object();
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) out[index_name(i, j)] = m[i - 1][j - 1].to_string();
    return out;
}

void flatten(const json& node, const std::string& path, std::string& out) {
    if (node.is_object() && !node.empty()) {
        for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, out);
        return;
    }
    if (node.is_array() && !node.empty()) {
        for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
        return;
    }
    out += path + ": " + (node.is_string() ? node.get<std::string>() : node.dump()) + "\n";
}

}  // namespace

json to_json(const StructureReport& report) {
    json out;
    out["kind"] = std::string(kind_name(report.kind));
    out["constants"] = named(report.constants);
    out["jacobi_residuals"] = named(report.jacobi_residuals);
    out["integrable"] = report.integrable;
    out["residual"] = report.residual ? json(report.residual->to_string()) : json(nullptr);
    out["quantities"] = named(report.quantities);
    out["notes"] = report.notes;
    return out;
}

json to_json(const std::map<Symbol, Rational>& point) {
    json out = json::object();
    for (const auto& [s, v] : point) out[s.name()] = v.get_str();
    return out;
}

json to_json(const EquivalenceVerdict& verdict) {
    json out;
    out["status"] = status_name(verdict.status);
    out["reasons"] = verdict.reasons;
    out["notes"] = verdict.notes;
    out["sample_point"] = to_json(verdict.sample_point);
    out["left"] = to_json(verdict.left);
    out["right"] = to_json(verdict.right);
    return out;
}

json to_json(const DimensionTable& table) {
    json out;
    out["n"] = table.n;
    out["f1"] = table.dim_f1;
    for (const auto& [key, value] : table.entries) out[key] = value;
    return out;
}

json to_json(const CurvatureData& data) {
    json out;
    json riemann = json::object();
    for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j)
                    if (i != j)
                        riemann[std::to_string(k) + "_" + std::to_string(l) + "," + index_name(i, j)] =
                            data.rho(k, l, i, j).to_string();
    out["riemann"] = riemann;
    out["ricci"] = matrix(data.ricci);
    out["phi"] = matrix(data.phi);
    out["sym"] = matrix(data.sym);
    out["flat"] = data.is_flat();
    return out;
}

json to_json(const Connection2D& connection) {
    json out = json::object();
    for (int k = 1; k <= 2; ++k)
        for (int i = 1; i <= 2; ++i)
            for (int j = i; j <= 2; ++j)
                out["g" + std::to_string(k) + index_name(i, j)] = connection(k, i, j).to_string();
    return out;
}

json to_json(const LinearJetEquation& equation) {
    json out = json::object();
    for (const auto& [v, c] : equation.terms()) out[v.to_string()] = c.to_string();
    return out;
}

std::string render_text(const json& document) {
    std::string out;
    flatten(document, "", out);
    return out;
}

}  // namespace vessiot
