#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vessiot/expression.hpp"

namespace vessiot {

/// Dense row-major matrix over the field of rational expressions.
using ExprMatrix = std::vector<std::vector<Expression>>;

/// Reduced row echelon form with zero rows dropped. Pivots are normalized to
/// 1, so the result is a canonical basis of the row space.
[[nodiscard]] ExprMatrix row_reduce(ExprMatrix rows);

[[nodiscard]] std::size_t rank(ExprMatrix rows);

/// Unique solution of A x = b for square nonsingular A; nullopt when A is
/// singular over the function field.
[[nodiscard]] std::optional<std::vector<Expression>> solve(const ExprMatrix& a, const std::vector<Expression>& b);

/// Determinant by fraction-field elimination.
[[nodiscard]] Expression determinant(ExprMatrix a);

}  // namespace vessiot
