#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "generators.hpp"
#include "vessiot/errors.hpp"
#include "vessiot/linear_algebra.hpp"
#include "vessiot/parser.hpp"

namespace vessiot {
namespace {

using testing::x;

Polynomial exact_cofactor(const Polynomial& p, const Polynomial& d) { return divide_exact(p, d).value(); }

Expression P(std::string_view text, int n = 3, const std::vector<std::string>& params = {}) {
    return parse(text, n, params);
}

TEST(Symbol, OrderPutsCoordinatesBeforeParameters) {
    EXPECT_LT(Symbol::coordinate(1), Symbol::coordinate(2));
    EXPECT_LT(Symbol::coordinate(9), Symbol::parameter("a"));
    EXPECT_LT(Symbol::parameter("a"), Symbol::parameter("b"));
    EXPECT_EQ(Symbol::parameter("k"), Symbol::parameter("k"));
    EXPECT_THROW((void)Symbol::coordinate(0), IndexOutOfRange);
    EXPECT_THROW((void)Symbol::parameter("x2"), InputError);
}

TEST(Polynomial, GcdOfProducts) {
    const Polynomial a = P("x1 - x2").numerator();
    const Polynomial b = P("x1^2 + 3*x2").numerator();
    const Polynomial c = P("2*x1*x2 - 1").numerator();
    const Polynomial g = gcd(a * b, a * c);
    EXPECT_EQ(g, primitive_part(a));
    EXPECT_TRUE(gcd(b, c).is_constant());
}

TEST(Polynomial, GcdRecoversCommonFactor) {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial g = testing::random_polynomial(rng, 3, 3, 4).numerator();
        const Polynomial a = testing::random_polynomial(rng, 3, 3, 4).numerator();
        const Polynomial b = testing::random_polynomial(rng, 3, 3, 4).numerator();
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        const Polynomial h = gcd(a * g, b * g);
        // h is a multiple of g and divides both products.
        EXPECT_TRUE(divide_exact(h, primitive_part(g)).has_value());
        EXPECT_TRUE(divide_exact(a * g, h).has_value());
        EXPECT_TRUE(divide_exact(b * g, h).has_value());
        const Polynomial ca = exact_cofactor(a * g, h);
        const Polynomial cb = exact_cofactor(b * g, h);
        EXPECT_TRUE(gcd(ca, cb).is_constant());
        EXPECT_GT(sgn(h.leading_term().coeff), 0);
        EXPECT_EQ(content(h), Rational(1));
    }
}

TEST(Polynomial, ExactSquareRoot) {
    const Polynomial p = P("x1 - 2*x2 + 3").numerator();
    auto root = sqrt_exact(p * p);
    ASSERT_TRUE(root.has_value());
    EXPECT_EQ(*root * *root, p * p);
    EXPECT_FALSE(sqrt_exact(P("x1^2 + 1").numerator()).has_value());
}

TEST(Parse, Examples) {
    const Expression e = P("1/(x2 - x1)^2", 2);
    EXPECT_EQ(e.numerator(), Polynomial(1L));
    EXPECT_EQ(e * pow(x(2) - x(1), 2), Expression(1L));
    EXPECT_TRUE(P("0").is_zero());
    EXPECT_EQ(P("(x1^2 - 1)/(x1 - 1)"), x(1) + Expression(1L));
}

TEST(Parse, PrecedenceAndAssociativity) {
    EXPECT_EQ(P("-x1^2"), -(x(1) * x(1)));
    EXPECT_EQ(P("8/4/2"), Expression(1L));
    EXPECT_EQ(P("1 - 2 - 3"), Expression(-4L));
    EXPECT_EQ(P("x1^-2"), Expression(1L) / (x(1) * x(1)));
    EXPECT_EQ(P("2*a", 1, {"a"}), Expression(2L) * Expression::parameter("a"));
}

TEST(Parse, Errors) {
    EXPECT_THROW((void)P("x1 +"), SyntaxError);
    EXPECT_THROW((void)P("(x1"), SyntaxError);
    EXPECT_THROW((void)P("x1 ^ x2"), SyntaxError);
    EXPECT_THROW((void)P("x4", 3), UnknownIdentifier);
    EXPECT_THROW((void)P("b", 3, {"a"}), UnknownIdentifier);
    EXPECT_THROW((void)P("1/0"), DivisionByZeroLiteral);
    EXPECT_THROW((void)P("x1/(2 - 2)"), DivisionByZero);
    try {
        (void)P("x1 + * 2");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.position(), 5U);
    }
}

TEST(Arithmetic, Examples) {
    EXPECT_TRUE((x(1) + -x(1)).is_zero());
    EXPECT_EQ(Expression(1L) / x(1) * x(1), Expression(1L));
    const Expression d = x(2) - x(1);
    EXPECT_TRUE((Expression(1L) / d - Expression(1L) / (d * d) * d).is_zero());
    EXPECT_THROW((void)(x(1) / (x(1) - x(1))), DivisionByZero);
}

TEST(Arithmetic, CanonicalDenominator) {
    const Expression e = P("3/(-2*x1 + 4)");
    EXPECT_EQ(e, P("-3/(2*x1 - 4)"));
    EXPECT_EQ(e.denominator(), P("x1 - 2").numerator());
}

TEST(Diff, Examples) {
    const Expression d = x(2) - x(1);
    EXPECT_EQ(diff(Expression(1L) / (d * d), 2), Expression(-2L) / pow(d, 3));
    EXPECT_TRUE(diff(Expression::parameter("a") * Expression(3L), 1).is_zero());
    EXPECT_EQ(diff(x(1) * x(2), 1), x(2));
}

TEST(IsConstant, Examples) {
    EXPECT_FALSE(is_constant(x(1)));
    EXPECT_TRUE(is_constant(Expression::parameter("a")));
    EXPECT_TRUE(is_constant(P("(x1 - x1) + 7/3")));
}

TEST(RationalSqrt, DetectsSquares) {
    const Expression w = P("1/x1^2", 1);
    auto s = rational_sqrt(w);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(*s, P("1/x1", 1));
    EXPECT_FALSE(rational_sqrt(P("2", 1)).has_value());
    EXPECT_FALSE(rational_sqrt(P("x1", 1)).has_value());
    auto q = rational_sqrt(P("4/9*(x1 + 1)^2/x2^4"));
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q * *q, P("4/9*(x1 + 1)^2/x2^4"));
}

TEST(LinearAlgebra, SolveDeterminantRank) {
    const ExprMatrix a{{x(1), Expression(1L)}, {Expression(1L), x(2)}};
    const auto sol = solve(a, {Expression(1L), Expression{}});
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ((*sol)[0] * x(1) + (*sol)[1], Expression(1L));
    EXPECT_EQ((*sol)[0] + (*sol)[1] * x(2), Expression{});
    EXPECT_EQ(determinant(a), x(1) * x(2) - Expression(1L));
    EXPECT_EQ(rank({{x(1), x(2)}, {x(1) * x(1), x(1) * x(2)}}), 1U);
    EXPECT_FALSE(solve({{x(1), x(2)}, {x(1) * x(1), x(1) * x(2)}}, {Expression(1L), Expression{}}).has_value());
}

class RandomExpressions : public ::testing::Test {
protected:
    std::mt19937 rng{20260901};
    Expression next() { return testing::random_rational_function(rng, 3, 2); }
};

TEST_F(RandomExpressions, FieldIdentities) {
    for (int trial = 0; trial < 40; ++trial) {
        const Expression e = next();
        const Expression f = next();
        EXPECT_TRUE((e - e).is_zero());
        if (!f.is_zero()) EXPECT_EQ((e * f) / f, e);
        EXPECT_EQ(e + f, f + e);
        EXPECT_EQ(e * (f + Expression(1L)), e * f + e);
    }
}

TEST_F(RandomExpressions, LeibnizAndMixedPartials) {
    for (int trial = 0; trial < 30; ++trial) {
        const Expression e = next();
        const Expression f = next();
        for (int i = 1; i <= 3; ++i) {
            EXPECT_EQ(diff(e * f, i), diff(e, i) * f + e * diff(f, i));
            for (int j = i + 1; j <= 3; ++j) EXPECT_EQ(diff(diff(e, i), j), diff(diff(e, j), i));
        }
    }
}

TEST_F(RandomExpressions, PrintParseRoundTrip) {
    for (int trial = 0; trial < 60; ++trial) {
        Expression e = next();
        if (trial % 3 == 0) e = e * Expression::parameter("a") - Expression(Rational(5, 7));
        EXPECT_EQ(parse(e.to_string(), 3, {"a"}), e) << e.to_string();
    }
}

// A construction history kept alongside its normalized result.
struct Built {
    Expression value;
    std::function<double(const std::map<Symbol, double>&)> eval;
};

TEST_F(RandomExpressions, NumericEvaluationMatchesHistory) {
    std::uniform_int_distribution<int> op(0, 3);
    for (int trial = 0; trial < 10; ++trial) {
        auto leaf = [&] {
            Expression p = testing::random_polynomial(rng, 3, 2);
            return Built{p, [p](const std::map<Symbol, double>& v) { return p.evaluate_numeric(v); }};
        };
        Built acc = leaf();
        for (int step = 0; step < 4; ++step) {
            Built b = leaf();
            if (b.value.is_zero()) continue;
            auto fa = acc.eval;
            auto fb = b.eval;
            switch (op(rng)) {
                case 0: acc = {acc.value + b.value, [=](const auto& v) { return fa(v) + fb(v); }}; break;
                case 1: acc = {acc.value - b.value, [=](const auto& v) { return fa(v) - fb(v); }}; break;
                case 2: acc = {acc.value * b.value, [=](const auto& v) { return fa(v) * fb(v); }}; break;
                default: acc = {acc.value / b.value, [=](const auto& v) { return fa(v) / fb(v); }}; break;
            }
        }
        int checked = 0;
        for (int attempt = 0; checked < 20 && attempt < 200; ++attempt) {
            const auto point = testing::random_point(rng, 3);
            const auto numeric = testing::to_double(point);
            const double den = acc.value.denominator().evaluate_numeric(numeric);
            if (std::abs(den) < 1e-6) continue;
            const double history = acc.eval(numeric);
            if (!std::isfinite(history)) continue;
            const double normalized = acc.value.evaluate_numeric(numeric);
            EXPECT_NEAR(normalized, history, 1e-7 * (1.0 + std::abs(history)));
            const auto exact = acc.value.evaluate(point).rational_value();
            ASSERT_TRUE(exact.has_value());
            EXPECT_NEAR(exact->get_d(), normalized, 1e-9 * (1.0 + std::abs(normalized)));
            ++checked;
        }
        EXPECT_EQ(checked, 20);
    }
}

TEST(Evaluate, SingularPoint) {
    const Expression e = P("1/(x2 - x1)", 2);
    EXPECT_THROW((void)e.evaluate({{Symbol::coordinate(1), Rational(1)}, {Symbol::coordinate(2), Rational(1)}}),
                 SingularPoint);
}

TEST(Substitute, Composition) {
    const Expression e = P("x1^2/(x2 - x1)", 2);
    const Expression s = e.substitute({{Symbol::coordinate(1), x(2)}, {Symbol::coordinate(2), x(1)}});
    EXPECT_EQ(s, P("x2^2/(x1 - x2)", 2));
}

}  // namespace
}  // namespace vessiot
