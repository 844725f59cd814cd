#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vessiot/expression.hpp"
#include "vessiot/section.hpp"

namespace vessiot {

struct NamedExpression {
    std::string name;
    Expression value;

    friend bool operator==(const NamedExpression&, const NamedExpression&) = default;
};

/// Outcome of a structure-equation computation.
///
/// `integrable` holds iff every would-be constant is constant and every
/// Jacobi residual vanishes. When a quotient fails to be constant it is kept
/// in `residual` and listed under `quantities` rather than `constants`.
struct StructureReport {
    ObjectKind kind = ObjectKind::ProductTriple2D;
    std::vector<NamedExpression> constants;
    std::vector<NamedExpression> jacobi_residuals;
    bool integrable = false;
    std::optional<Expression> residual;
    /// Intermediate values worth reporting (solved invariants, determinants).
    std::vector<NamedExpression> quantities;
    std::vector<std::string> notes;

    [[nodiscard]] const Expression* constant(std::string_view name) const {
        for (const auto& c : constants)
            if (c.name == name) return &c.value;
        return nullptr;
    }
    [[nodiscard]] const Expression* quantity(std::string_view name) const {
        for (const auto& q : quantities)
            if (q.name == name) return &q.value;
        return nullptr;
    }
};

}  // namespace vessiot
