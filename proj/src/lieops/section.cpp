#include "vessiot/section.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>
#include <sstream>

#include "vessiot/errors.hpp"
#include "vessiot/parser.hpp"

namespace vessiot {
namespace {

const std::array<KindInfo, 6>& catalog() {
    static const std::array<KindInfo, 6> table{{
        {ObjectKind::OneForm1D, "ONE_FORM_1D", 1, {"alpha"}, {"gamma"}},
        {ObjectKind::Christoffel1D, "CHRISTOFFEL_1D", 1, {"gamma"}, {"alpha", "nu"}},
        {ObjectKind::Metric2D, "METRIC_2D", 2, {"w11", "w22", "w12"}, {}},
        {ObjectKind::ProductTriple2D, "PRODUCT_TRIPLE_2D", 2, {"w1", "w2", "w3"}, {}},
        {ObjectKind::Christoffel2D, "CHRISTOFFEL_2D", 2, {"g111", "g112", "g122", "g211", "g212", "g222"}, {}},
        {ObjectKind::ContactPair3D, "CONTACT_PAIR_3D", 3, {"a1", "a2", "a3", "b23", "b31", "b12"}, {}},
    }};
    return table;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

const KindInfo& kind_info(ObjectKind kind) {
    for (const auto& info : catalog())
        if (info.kind == kind) return info;
    throw PreconditionViolation("unknown object kind");
}

ObjectKind kind_from_name(std::string_view name) {
    for (const auto& info : catalog())
        if (info.name == name) return info.kind;
    throw InputError("unknown object kind '" + std::string(name) + "'");
}

GeometricSection::GeometricSection(ObjectKind kind, std::vector<Expression> components,
                                   std::map<std::string, Expression> auxiliary, std::vector<std::string> params)
    : kind_(kind), components_(std::move(components)), auxiliary_(std::move(auxiliary)), params_(std::move(params)) {
    const auto& info = kind_info(kind);
    if (components_.size() != info.keys.size())
        throw InputError(std::string(info.name) + " needs " + std::to_string(info.keys.size()) + " components, got " +
                         std::to_string(components_.size()));
    for (const auto& [key, value] : auxiliary_)
        if (std::find(info.auxiliary_keys.begin(), info.auxiliary_keys.end(), key) == info.auxiliary_keys.end())
            throw InputError("key '" + key + "' is not allowed for " + std::string(info.name));
    std::sort(params_.begin(), params_.end());
    auto check = [&](const Expression& e) {
        for (const auto& s : e.symbols()) {
            if (s.is_coordinate() && s.coordinate_index() > info.n)
                throw InputError("component uses " + s.name() + " beyond dimension " + std::to_string(info.n));
            if (!s.is_coordinate() && !std::binary_search(params_.begin(), params_.end(), s.name()))
                throw InputError("undeclared parameter " + s.name());
        }
    };
    for (const auto& c : components_) check(c);
    for (const auto& [key, value] : auxiliary_) check(value);
}

const Expression& GeometricSection::component(std::string_view key) const {
    const auto& keys = kind_info(kind_).keys;
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) throw InputError("no component '" + std::string(key) + "' in " + std::string(kind_name(kind_)));
    return components_[static_cast<std::size_t>(it - keys.begin())];
}

const Expression* GeometricSection::find_auxiliary(std::string_view key) const {
    auto it = auxiliary_.find(std::string(key));
    return it == auxiliary_.end() ? nullptr : &it->second;
}

std::string GeometricSection::to_text() const {
    const auto& info = kind_info(kind_);
    std::ostringstream os;
    os << "kind = " << info.name << "\n";
    os << "n = " << info.n << "\n";
    if (!params_.empty()) {
        os << "params = ";
        for (std::size_t k = 0; k < params_.size(); ++k) os << (k ? "," : "") << params_[k];
        os << "\n";
    }
    for (std::size_t k = 0; k < info.keys.size(); ++k) os << info.keys[k] << " = " << components_[k].to_string() << "\n";
    for (const auto& [key, value] : auxiliary_) os << key << " = " << value.to_string() << "\n";
    return os.str();
}

GeometricSection parse_section(std::string_view text) {
    struct Line {
        std::string key;
        std::string value;
        int number;
    };
    std::vector<Line> lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw InputError("line " + std::to_string(number) + ": expected 'key = value'");
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty() || value.empty()) throw InputError("line " + std::to_string(number) + ": empty key or value");
        for (const auto& l : lines)
            if (l.key == key) throw InputError("line " + std::to_string(number) + ": duplicate key '" + key + "'");
        lines.push_back({std::move(key), std::move(value), number});
    }

    std::optional<ObjectKind> kind;
    std::optional<int> n;
    std::vector<std::string> params;
    for (const auto& l : lines) {
        if (l.key == "kind") {
            kind = kind_from_name(l.value);
        } else if (l.key == "n") {
            try {
                std::size_t used = 0;
                n = std::stoi(l.value, &used);
                if (used != l.value.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw InputError("line " + std::to_string(l.number) + ": n must be an integer");
            }
        } else if (l.key == "params") {
            std::istringstream ps(l.value);
            std::string p;
            while (std::getline(ps, p, ',')) {
                std::string name(trim(p));
                if (!is_valid_parameter_name(name))
                    throw InputError("line " + std::to_string(l.number) + ": invalid parameter name '" + name + "'");
                params.push_back(std::move(name));
            }
        }
    }
    if (!kind) throw InputError("section file lacks a 'kind' header");
    const auto& info = kind_info(*kind);
    if (!n) throw InputError("section file lacks an 'n' header");
    if (*n != info.n)
        throw InputError(std::string(info.name) + " lives in dimension " + std::to_string(info.n) + ", file says n = " +
                         std::to_string(*n));

    std::vector<std::optional<Expression>> comps(info.keys.size());
    std::map<std::string, Expression> aux;
    for (const auto& l : lines) {
        if (l.key == "kind" || l.key == "n" || l.key == "params") continue;
        auto parse_value = [&]() {
            try {
                return parse(l.value, info.n, params);
            } catch (const Error& e) {
                throw InputError("line " + std::to_string(l.number) + " (" + l.key + "): " + e.what());
            }
        };
        auto it = std::find(info.keys.begin(), info.keys.end(), l.key);
        if (it != info.keys.end()) {
            comps[static_cast<std::size_t>(it - info.keys.begin())] = parse_value();
        } else if (std::find(info.auxiliary_keys.begin(), info.auxiliary_keys.end(), l.key) != info.auxiliary_keys.end()) {
            aux.emplace(l.key, parse_value());
        } else {
            throw InputError("line " + std::to_string(l.number) + ": unknown key '" + l.key + "' for " +
                             std::string(info.name));
        }
    }
    std::vector<Expression> components;
    for (std::size_t k = 0; k < comps.size(); ++k) {
        if (!comps[k]) throw InputError("missing component '" + std::string(info.keys[k]) + "'");
        components.push_back(std::move(*comps[k]));
    }
    return GeometricSection(*kind, std::move(components), std::move(aux), std::move(params));
}

GeometricSection load_section(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open section file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_section(buf.str());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

Expression nondegeneracy(const GeometricSection& s) {
    const auto& c = s.components();
    switch (s.kind()) {
        case ObjectKind::OneForm1D:
            return c[0];
        case ObjectKind::Metric2D:
            return c[0] * c[1] - c[2] * c[2];
        case ObjectKind::ProductTriple2D:
            return c[2] * (Expression(1L) - c[0] * c[1]);
        case ObjectKind::ContactPair3D:
            return c[0] * c[3] + c[1] * c[4] + c[2] * c[5];
        case ObjectKind::Christoffel1D:
        case ObjectKind::Christoffel2D:
            return Expression(1L);
    }
    return Expression(1L);
}

}  // namespace vessiot
