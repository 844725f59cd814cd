#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "vessiot/polynomial.hpp"
#include "vessiot/symbol.hpp"

namespace vessiot {

/// Exact multivariate rational function over the coordinates and parameter
/// symbols. Always canonical: numerator and denominator are coprime and the
/// denominator is an integer-primitive polynomial with positive leading
/// coefficient, so equal values compare equal structurally.
class Expression {
public:
    Expression() = default;
    Expression(long value) : num_(value) {}               // NOLINT(google-explicit-constructor)
    Expression(const Rational& value) : num_(value) {}    // NOLINT(google-explicit-constructor)
    explicit Expression(Symbol s) : num_(s) {}
    explicit Expression(const Polynomial& p) : num_(p) {}

    static Expression coordinate(int index) { return Expression(Symbol::coordinate(index)); }
    static Expression parameter(std::string_view name) { return Expression(Symbol::parameter(name)); }
    /// Normalizes num/den. Throws DivisionByZero when den is zero.
    static Expression fraction(Polynomial num, Polynomial den);

    [[nodiscard]] const Polynomial& numerator() const noexcept { return num_; }
    [[nodiscard]] const Polynomial& denominator() const noexcept { return den_; }

    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    /// No coordinate occurs; parameters are allowed.
    [[nodiscard]] bool is_constant() const;
    /// No symbol at all occurs.
    [[nodiscard]] bool is_rational() const noexcept { return num_.is_constant() && den_.is_constant(); }
    [[nodiscard]] std::optional<Rational> rational_value() const;
    [[nodiscard]] bool depends_on(Symbol s) const noexcept { return num_.contains(s) || den_.contains(s); }
    [[nodiscard]] std::set<Symbol> symbols() const;

    /// Substitutes rational values for some symbols. Throws SingularPoint if
    /// the denominator vanishes.
    [[nodiscard]] Expression evaluate(const std::map<Symbol, Rational>& values) const;
    [[nodiscard]] double evaluate_numeric(const std::map<Symbol, double>& values) const;
    /// Simultaneous substitution of expressions for symbols.
    [[nodiscard]] Expression substitute(const std::map<Symbol, Expression>& values) const;

    Expression operator-() const;
    Expression& operator+=(const Expression& o) { return *this = *this + o; }
    Expression& operator-=(const Expression& o) { return *this = *this - o; }
    Expression& operator*=(const Expression& o) { return *this = *this * o; }
    Expression& operator/=(const Expression& o) { return *this = *this / o; }

    friend Expression operator+(const Expression& a, const Expression& b);
    friend Expression operator-(const Expression& a, const Expression& b);
    friend Expression operator*(const Expression& a, const Expression& b);
    friend Expression operator/(const Expression& a, const Expression& b);
    friend bool operator==(const Expression& a, const Expression& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Canonical text, re-parseable by `parse`.
    [[nodiscard]] std::string to_string() const;

private:
    Polynomial num_;
    Polynomial den_{1L};
};

[[nodiscard]] Expression pow(const Expression& base, int exponent);

/// Partial derivative with respect to coordinate x_i (1-based).
[[nodiscard]] Expression diff(const Expression& e, int coordinate);
[[nodiscard]] Expression diff(const Expression& e, Symbol s);

/// True iff every coordinate partial derivative vanishes identically.
[[nodiscard]] inline bool is_constant(const Expression& e) { return e.is_constant(); }

/// Rational square root: some sigma with sigma^2 == e, leading coefficient of
/// the numerator positive.
[[nodiscard]] std::optional<Expression> rational_sqrt(const Expression& e);

/// Default sample point x^i = i + 1 for i = 1..n.
[[nodiscard]] std::map<Symbol, Rational> default_sample_point(int n);

}  // namespace vessiot
