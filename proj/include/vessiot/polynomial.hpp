#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vessiot/symbol.hpp"

namespace vessiot {

using Rational = mpq_class;

/// Power product of symbols, stored sparse and sorted by symbol order.
/// Ordered by graded lexicographic order with x1 as the most significant
/// variable.
class Monomial {
public:
    using Factor = std::pair<Symbol, unsigned>;

    Monomial() = default;
    static Monomial power(Symbol s, unsigned exponent = 1);

    [[nodiscard]] bool is_one() const noexcept { return factors_.empty(); }
    [[nodiscard]] unsigned degree() const noexcept { return degree_; }
    [[nodiscard]] unsigned exponent(Symbol s) const noexcept;
    [[nodiscard]] const std::vector<Factor>& factors() const noexcept { return factors_; }

    /// Quotient when `divisor` divides this monomial.
    [[nodiscard]] std::optional<Monomial> divide(const Monomial& divisor) const;
    /// The monomial with symbol `s` dropped.
    [[nodiscard]] Monomial without(Symbol s) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

    [[nodiscard]] std::string to_string() const;

private:
    std::vector<Factor> factors_;
    unsigned degree_ = 0;
};

struct Term {
    Monomial monomial;
    Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept in strictly decreasing monomial order with no zero coefficients, so
/// structural equality is mathematical equality.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Polynomial(Symbol s);
    Polynomial(const Monomial& m, const Rational& c);

    /// Builds a polynomial from arbitrary terms (any order, repeats allowed).
    static Polynomial from_terms(std::vector<Term> terms);

    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
    }
    /// Value of a constant polynomial; zero for the zero polynomial.
    [[nodiscard]] Rational constant_value() const;
    [[nodiscard]] const Term& leading_term() const { return terms_.front(); }
    [[nodiscard]] unsigned total_degree() const noexcept;
    [[nodiscard]] unsigned degree_in(Symbol s) const noexcept;
    [[nodiscard]] bool contains(Symbol s) const noexcept;
    [[nodiscard]] std::set<Symbol> symbols() const;

    /// Coefficients with respect to `s`, keyed by exponent of `s`.
    [[nodiscard]] std::map<unsigned, Polynomial, std::greater<>> coefficients_in(Symbol s) const;
    /// Leading coefficient with respect to `s`.
    [[nodiscard]] Polynomial leading_coefficient_in(Symbol s) const;

    [[nodiscard]] Polynomial derivative(Symbol s) const;
    [[nodiscard]] Polynomial evaluate(const std::map<Symbol, Rational>& values) const;
    [[nodiscard]] double evaluate_numeric(const std::map<Symbol, double>& values) const;
    [[nodiscard]] Polynomial pow(unsigned e) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c);
    Polynomial& operator/=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    [[nodiscard]] std::string to_string() const;

private:
    void add_scaled(const Polynomial& o, const Rational& scale, const Monomial& shift);

    std::vector<Term> terms_;
};

/// Quotient a / b; nullopt when b does not divide a exactly.
[[nodiscard]] std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Rational content with sign: p / content(p) has coprime integer
/// coefficients and a positive leading coefficient. content(0) = 1.
[[nodiscard]] Rational content(const Polynomial& p);
[[nodiscard]] Polynomial primitive_part(const Polynomial& p);

/// Greatest common divisor over Q, returned primitive with positive leading
/// coefficient. gcd(0, 0) = 0.
[[nodiscard]] Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Exact square root, sign chosen so the leading coefficient is positive.
[[nodiscard]] std::optional<Polynomial> sqrt_exact(const Polynomial& p);

}  // namespace vessiot
