#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vessiot/expression.hpp"

namespace vessiot {

/// Parses the expression grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' exponent)*
///   exponent:= ['-'] INT | '(' ['-'] INT ')'
///   primary := INT | IDENT | '(' expr ')'
///
/// Identifiers are the coordinates x1..xn and the declared parameters.
/// Errors: SyntaxError (with position), UnknownIdentifier,
/// DivisionByZeroLiteral, DivisionByZero.
[[nodiscard]] Expression parse(std::string_view text, int n, const std::vector<std::string>& params = {});

/// True for a well-formed parameter identifier that is not a coordinate name.
[[nodiscard]] bool is_valid_parameter_name(std::string_view name) noexcept;

}  // namespace vessiot
