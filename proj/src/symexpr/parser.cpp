#include "vessiot/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "vessiot/errors.hpp"

namespace vessiot {
namespace {

constexpr long kMaxExponent = 1000;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Operand {
    Expression value;
    bool literal_zero = false;
};

class Parser {
public:
    Parser(std::string_view text, int n, const std::vector<std::string>& params)
        : text_(text), n_(n), params_(params.begin(), params.end()) {}

    Expression run() {
        skip_space();
        if (at_end()) throw SyntaxError("empty expression", pos_);
        Operand e = expr();
        skip_space();
        if (!at_end()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return std::move(e.value);
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (at_end()) throw SyntaxError(std::string("expected '") + c + "' but input ended", pos_);
            throw SyntaxError(std::string("expected '") + c + "'", pos_);
        }
    }

    Operand expr() {
        Operand lhs = term();
        for (;;) {
            if (accept('+')) {
                Operand rhs = term();
                lhs = {lhs.value + rhs.value, false};
            } else if (accept('-')) {
                Operand rhs = term();
                lhs = {lhs.value - rhs.value, false};
            } else {
                return lhs;
            }
        }
    }

    Operand term() {
        Operand lhs = unary();
        for (;;) {
            if (accept('*')) {
                Operand rhs = unary();
                lhs = {lhs.value * rhs.value, false};
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Operand rhs = unary();
                if (rhs.literal_zero) throw DivisionByZeroLiteral("literal zero denominator at position " + std::to_string(at));
                lhs = {lhs.value / rhs.value, false};
            } else {
                return lhs;
            }
        }
    }

    Operand unary() {
        if (accept('-')) {
            Operand inner = unary();
            return {-inner.value, inner.literal_zero};
        }
        return power();
    }

    Operand power() {
        Operand base = primary();
        while (accept('^')) {
            const std::size_t at = pos_;
            const long e = exponent();
            if (e < 0 && base.literal_zero)
                throw DivisionByZeroLiteral("literal zero raised to a negative power at position " + std::to_string(at));
            base = {pow(base.value, static_cast<int>(e)), base.literal_zero && e > 0};
        }
        return base;
    }

    long exponent() {
        const bool paren = accept('(');
        const bool negative = accept('-');
        skip_space();
        const std::size_t start = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("exponent must be an integer literal", pos_);
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > kMaxExponent) throw SyntaxError("exponent too large", start);
            ++pos_;
        }
        if (paren) expect(')');
        return negative ? -value : value;
    }

    Operand primary() {
        skip_space();
        if (at_end()) throw SyntaxError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Operand inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (!at_end() && is_ident_char(text_[pos_]))
                throw SyntaxError("malformed number", start);
            mpz_class v(std::string(text_.substr(start, pos_ - start)), 10);
            return {Expression(Rational(v)), v == 0};
        }
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            if (is_coordinate_name(name)) {
                const int index = name[1] - '0';
                if (index > n_)
                    throw UnknownIdentifier("coordinate '" + name + "' exceeds dimension " + std::to_string(n_) +
                                            " at position " + std::to_string(start));
                return {Expression::coordinate(index), false};
            }
            if (params_.count(name)) return {Expression::parameter(name), false};
            throw UnknownIdentifier("unknown identifier '" + name + "' at position " + std::to_string(start));
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int n_;
    std::set<std::string> params_;
};

}  // namespace

bool is_valid_parameter_name(std::string_view name) noexcept {
    if (name.empty() || !is_ident_start(name.front())) return false;
    if (!std::all_of(name.begin(), name.end(), is_ident_char)) return false;
    return !is_coordinate_name(name);
}

Expression parse(std::string_view text, int n, const std::vector<std::string>& params) {
    if (n < 1 || n > kMaxDimension) throw IndexOutOfRange("ambient dimension " + std::to_string(n) + " unsupported");
    for (const auto& p : params)
        if (!is_valid_parameter_name(p)) throw InputError("invalid parameter name '" + p + "'");
    return Parser(text, n, params).run();
}

}  // namespace vessiot
