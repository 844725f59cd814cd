#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vessiot/expression.hpp"

namespace vessiot {

enum class ObjectKind {
    OneForm1D,
    Christoffel1D,
    Metric2D,
    ProductTriple2D,
    Christoffel2D,
    ContactPair3D,
};

struct KindInfo {
    ObjectKind kind;
    std::string_view name;
    int n;
    std::vector<std::string_view> keys;           // component keys, in storage order
    std::vector<std::string_view> auxiliary_keys; // optional extra 1D objects
};

[[nodiscard]] const KindInfo& kind_info(ObjectKind kind);
[[nodiscard]] ObjectKind kind_from_name(std::string_view name);
[[nodiscard]] inline std::string_view kind_name(ObjectKind kind) { return kind_info(kind).name; }

/// A geometric object omega(x): a kind plus its component expressions.
///
/// 1D kinds may carry auxiliary objects next to their single component
/// (`gamma` on a one-form, `alpha`/`nu` on a 1D Christoffel object) so the
/// pairs (alpha, gamma) and (gamma, nu) can be described in one file.
class GeometricSection {
public:
    GeometricSection(ObjectKind kind, std::vector<Expression> components,
                     std::map<std::string, Expression> auxiliary = {}, std::vector<std::string> params = {});

    [[nodiscard]] ObjectKind kind() const noexcept { return kind_; }
    [[nodiscard]] int n() const noexcept { return kind_info(kind_).n; }
    [[nodiscard]] const std::vector<Expression>& components() const noexcept { return components_; }
    [[nodiscard]] const Expression& component(std::string_view key) const;
    [[nodiscard]] const std::map<std::string, Expression>& auxiliary() const noexcept { return auxiliary_; }
    [[nodiscard]] const Expression* find_auxiliary(std::string_view key) const;
    [[nodiscard]] const std::vector<std::string>& params() const noexcept { return params_; }

    /// Canonical section-file text; `parse_section` reads it back.
    [[nodiscard]] std::string to_text() const;

private:
    ObjectKind kind_;
    std::vector<Expression> components_;
    std::map<std::string, Expression> auxiliary_;
    std::vector<std::string> params_;
};

/// Reads `key = value` lines: headers `kind`, `n`, optional `params = a,b`,
/// then one line per component. `#` starts a comment. Throws InputError and
/// the parser's errors.
[[nodiscard]] GeometricSection parse_section(std::string_view text);
[[nodiscard]] GeometricSection load_section(const std::filesystem::path& path);

/// The kind's nondegeneracy witness: alpha, det(omega), omega^3(1 - omega^1
/// omega^2), the coefficient of alpha ^ beta, or 1 for the affine kinds.
[[nodiscard]] Expression nondegeneracy(const GeometricSection& section);

}  // namespace vessiot
