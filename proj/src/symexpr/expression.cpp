#include "vessiot/expression.hpp"

#include <cstdlib>

#include "vessiot/errors.hpp"

namespace vessiot {
namespace {

Polynomial quotient(const Polynomial& a, const Polynomial& b) {
    auto q = divide_exact(a, b);
    if (!q) throw PreconditionViolation("internal: gcd does not divide operand");
    return std::move(*q);
}

}  // namespace

Expression Expression::fraction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw DivisionByZero("denominator is identically zero");
    Expression e;
    if (num.is_zero()) return e;
    const Polynomial g = gcd(num, den);
    if (!g.is_constant()) {
        num = quotient(num, g);
        den = quotient(den, g);
    }
    const Rational c = content(den);
    num /= c;
    den /= c;
    e.num_ = std::move(num);
    e.den_ = std::move(den);
    return e;
}

bool Expression::is_constant() const {
    for (const auto& s : symbols())
        if (s.is_coordinate()) return false;
    return true;
}

std::optional<Rational> Expression::rational_value() const {
    if (!is_rational()) return std::nullopt;
    return num_.constant_value() / den_.constant_value();
}

std::set<Symbol> Expression::symbols() const {
    auto out = num_.symbols();
    auto d = den_.symbols();
    out.insert(d.begin(), d.end());
    return out;
}

Expression Expression::evaluate(const std::map<Symbol, Rational>& values) const {
    Polynomial den = den_.evaluate(values);
    if (den.is_zero()) throw SingularPoint("denominator " + den_.to_string() + " vanishes at the sample point");
    return fraction(num_.evaluate(values), std::move(den));
}

double Expression::evaluate_numeric(const std::map<Symbol, double>& values) const {
    return num_.evaluate_numeric(values) / den_.evaluate_numeric(values);
}

Expression Expression::substitute(const std::map<Symbol, Expression>& values) const {
    auto apply = [&](const Polynomial& p) {
        Expression sum;
        for (const auto& t : p.terms()) {
            Expression term(t.coeff);
            for (const auto& [sym, e] : t.monomial.factors()) {
                auto it = values.find(sym);
                if (it == values.end())
                    term *= Expression(Polynomial(Monomial::power(sym, e), Rational(1)));
                else
                    term *= pow(it->second, static_cast<int>(e));
            }
            sum += term;
        }
        return sum;
    };
    return apply(num_) / apply(den_);
}

Expression Expression::operator-() const {
    Expression out = *this;
    out.num_ = -out.num_;
    return out;
}

Expression operator+(const Expression& a, const Expression& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Expression::fraction(a.num_ + b.num_, a.den_);
    const Polynomial g = gcd(a.den_, b.den_);
    if (g.is_constant()) {
        // Coprime reduced denominators give a reduced sum.
        Expression out;
        out.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        if (out.num_.is_zero()) return Expression{};
        out.den_ = a.den_ * b.den_;
        return out;
    }
    const Polynomial ad = quotient(a.den_, g);
    const Polynomial bd = quotient(b.den_, g);
    return Expression::fraction(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

Expression operator-(const Expression& a, const Expression& b) { return a + (-b); }

Expression operator*(const Expression& a, const Expression& b) {
    if (a.is_zero() || b.is_zero()) return Expression{};
    const Polynomial g1 = gcd(a.num_, b.den_);
    const Polynomial g2 = gcd(b.num_, a.den_);
    Polynomial num = quotient(a.num_, g1) * quotient(b.num_, g2);
    Polynomial den = quotient(a.den_, g2) * quotient(b.den_, g1);
    const Rational c = content(den);
    Expression out;
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    out.num_ /= c;
    out.den_ /= c;
    return out;
}

Expression operator/(const Expression& a, const Expression& b) {
    if (b.is_zero()) throw DivisionByZero("division by an expression that normalizes to zero");
    Expression inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    const Rational c = content(inv.den_);
    inv.num_ /= c;
    inv.den_ /= c;
    return a * inv;
}

std::string Expression::to_string() const {
    if (den_ == Polynomial(1L)) return num_.to_string();
    std::string out;
    if (num_.terms().size() > 1)
        out = "(" + num_.to_string() + ")";
    else
        out = num_.to_string();
    out += '/';
    const bool bare_den = den_.terms().size() == 1 && den_.leading_term().coeff == 1 &&
                          den_.leading_term().monomial.factors().size() <= 1;
    const bool integer_den = den_.is_constant();
    if (bare_den || integer_den)
        out += den_.to_string();
    else
        out += "(" + den_.to_string() + ")";
    return out;
}

Expression pow(const Expression& base, int exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw DivisionByZero("zero raised to a negative power");
        return Expression(1L) / pow(base, -exponent);
    }
    // Powers of a reduced fraction stay reduced.
    return Expression::fraction(base.numerator().pow(static_cast<unsigned>(exponent)),
                                base.denominator().pow(static_cast<unsigned>(exponent)));
}

Expression diff(const Expression& e, Symbol s) {
    if (!e.depends_on(s)) return Expression{};
    const Polynomial& n = e.numerator();
    const Polynomial& d = e.denominator();
    if (d.is_constant()) return Expression::fraction(n.derivative(s), d);
    return Expression::fraction(n.derivative(s) * d - n * d.derivative(s), d * d);
}

Expression diff(const Expression& e, int coordinate) { return diff(e, Symbol::coordinate(coordinate)); }

std::optional<Expression> rational_sqrt(const Expression& e) {
    auto n = sqrt_exact(e.numerator());
    if (!n) return std::nullopt;
    auto d = sqrt_exact(e.denominator());
    if (!d) return std::nullopt;
    return Expression::fraction(std::move(*n), std::move(*d));
}

std::map<Symbol, Rational> default_sample_point(int n) {
    std::map<Symbol, Rational> point;
    for (int i = 1; i <= n; ++i) point.emplace(Symbol::coordinate(i), Rational(i + 1));
    return point;
}

}  // namespace vessiot
