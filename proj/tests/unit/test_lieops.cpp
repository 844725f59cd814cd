#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "vessiot/errors.hpp"
#include "vessiot/medolaghi.hpp"
#include "vessiot/parser.hpp"

namespace vessiot {
namespace {

using testing::x;

GeometricSection metric(Expression a, Expression b, Expression c) {
    return GeometricSection(ObjectKind::Metric2D, {std::move(a), std::move(b), std::move(c)});
}

GeometricSection product(Expression a, Expression b, Expression c) {
    return GeometricSection(ObjectKind::ProductTriple2D, {std::move(a), std::move(b), std::move(c)});
}

LinearJetEquation eq2(std::initializer_list<std::pair<JetVariable, Expression>> terms) {
    LinearJetEquation e(2);
    for (const auto& [v, c] : terms) e.add(v, c);
    return e;
}

TEST(Catalog, ComponentCounts) {
    EXPECT_EQ(kind_info(ObjectKind::OneForm1D).keys.size(), 1U);
    EXPECT_EQ(kind_info(ObjectKind::Christoffel1D).keys.size(), 1U);
    EXPECT_EQ(kind_info(ObjectKind::Metric2D).keys.size(), 3U);
    EXPECT_EQ(kind_info(ObjectKind::ProductTriple2D).keys.size(), 3U);
    EXPECT_EQ(kind_info(ObjectKind::Christoffel2D).keys.size(), 6U);
    EXPECT_EQ(kind_info(ObjectKind::ContactPair3D).keys.size(), 6U);
    EXPECT_EQ(kind_from_name("METRIC_2D"), ObjectKind::Metric2D);
    EXPECT_THROW((void)kind_from_name("METRIC_3D"), InputError);
}

TEST(Section, ParseAndRoundTrip) {
    const auto s = parse_section(
        "# projective\n"
        "kind = PRODUCT_TRIPLE_2D\n"
        "n = 2\n"
        "params = k\n"
        "w1 = 0\n"
        "w2 = 0   # trailing comment\n"
        "w3 = k/(x2 - x1)^2\n");
    EXPECT_EQ(s.kind(), ObjectKind::ProductTriple2D);
    EXPECT_EQ(s.component("w3"), parse("k/(x2 - x1)^2", 2, {"k"}));
    const auto again = parse_section(s.to_text());
    EXPECT_EQ(again.components(), s.components());
    EXPECT_EQ(again.params(), s.params());
    EXPECT_EQ(again.to_text(), s.to_text());
}

TEST(Section, Auxiliary1D) {
    const auto s = parse_section("kind = CHRISTOFFEL_1D\nn = 1\ngamma = -2/x1\nnu = 0\n");
    ASSERT_NE(s.find_auxiliary("nu"), nullptr);
    EXPECT_EQ(s.find_auxiliary("alpha"), nullptr);
    EXPECT_EQ(parse_section(s.to_text()).auxiliary(), s.auxiliary());
}

TEST(Section, Errors) {
    EXPECT_THROW((void)parse_section("n = 2\nw11 = 1\nw22 = 1\nw12 = 0\n"), InputError);
    EXPECT_THROW((void)parse_section("kind = METRIC_2D\nn = 3\nw11 = 1\nw22 = 1\nw12 = 0\n"), InputError);
    EXPECT_THROW((void)parse_section("kind = METRIC_2D\nn = 2\nw11 = 1\nw22 = 1\n"), InputError);
    EXPECT_THROW((void)parse_section("kind = METRIC_2D\nn = 2\nw11 = 1\nw11 = 2\nw22 = 1\nw12 = 0\n"), InputError);
    EXPECT_THROW((void)parse_section("kind = METRIC_2D\nn = 2\nw11 = 1\nw22 = 1\nw12 = 0\nw21 = 0\n"), InputError);
    EXPECT_THROW((void)parse_section("kind = METRIC_2D\nn = 2\nw11 = x3\nw22 = 1\nw12 = 0\n"), InputError);
    EXPECT_THROW((void)parse_section("kind = METRIC_2D\nn = 2\nw11 = a\nw22 = 1\nw12 = 0\n"), InputError);
    EXPECT_THROW((void)parse_section("kind = METRIC_2D\nn = 2\nw11 = 1 +\nw22 = 1\nw12 = 0\n"), InputError);
    EXPECT_THROW((void)parse_section("kind = METRIC_2D\nn = 2\nparams = x1\nw11 = 1\nw22 = 1\nw12 = 0\n"), InputError);
    EXPECT_THROW((void)load_section("/nonexistent/section.txt"), InputError);
}

TEST(Nondegeneracy, Examples) {
    EXPECT_EQ(nondegeneracy(metric(1L, 1L, 0L)), Expression(1L));
    EXPECT_EQ(nondegeneracy(metric(0L, 0L, 1L)), Expression(-1L));
    const Expression u = Expression(1L) / pow(x(2) - x(1), 2);
    EXPECT_EQ(nondegeneracy(product(0L, 0L, u)), u);
    EXPECT_THROW((void)medolaghi_equations(metric(x(1), x(1), x(1))), DegenerateSection);
    EXPECT_THROW((void)medolaghi_equations(product(x(1), Expression(1L) / x(1), 1L)), DegenerateSection);
    EXPECT_THROW((void)medolaghi_equations(GeometricSection(ObjectKind::OneForm1D, {Expression{}})),
                 DegenerateSection);
}

TEST(Medolaghi, EuclideanKilling) {
    const auto sys = medolaghi_equations(metric(1L, 1L, 0L));
    ASSERT_EQ(sys.size(), 3U);
    EXPECT_EQ(sys[0], eq2({{xi(2, 1, {1}), 2L}}));
    EXPECT_EQ(sys[1], eq2({{xi(2, 2, {2}), 2L}}));
    EXPECT_EQ(sys[2], eq2({{xi(2, 1, {2}), 1L}, {xi(2, 2, {1}), 1L}}));
}

TEST(Medolaghi, FlatProduct) {
    const auto sys = medolaghi_equations(product(0L, 0L, 1L));
    ASSERT_EQ(sys.size(), 3U);
    EXPECT_EQ(sys[0], eq2({{xi(2, 1, {2}), 1L}}));
    EXPECT_EQ(sys[1], eq2({{xi(2, 2, {1}), 1L}}));
    EXPECT_EQ(sys[2], eq2({{xi(2, 1, {1}), 1L}, {xi(2, 2, {2}), 1L}}));
}

TEST(Medolaghi, OneForm1D) {
    const auto sys = medolaghi_equations(GeometricSection(ObjectKind::OneForm1D, {Expression(1L) / x(1)}));
    ASSERT_EQ(sys.size(), 1U);
    LinearJetEquation expected(1);
    expected.add(xi(1, 1, {1}), Expression(1L) / x(1));
    expected.add(xi(1, 1), Expression(-1L) / (x(1) * x(1)));
    EXPECT_EQ(sys[0], expected);
}

TEST(Medolaghi, Orders) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        for (const auto& eq : medolaghi_equations(testing::random_metric(rng))) EXPECT_EQ(eq.order(), 1);
        for (const auto& eq : medolaghi_equations(testing::random_product_case(rng).section)) EXPECT_EQ(eq.order(), 1);
        std::vector<Expression> comps;
        for (int k = 0; k < 6; ++k) comps.push_back(testing::random_rational_function(rng, 2, 1));
        for (const auto& eq : medolaghi_equations(GeometricSection(ObjectKind::Christoffel2D, comps)))
            EXPECT_EQ(eq.order(), 2);
    }
    for (const auto& eq : medolaghi_equations(GeometricSection(ObjectKind::Christoffel1D, {x(1)})))
        EXPECT_EQ(eq.order(), 2);
}

TEST(Medolaghi, ContactLieDerivatives) {
    // dx2 component of L_xi alpha for alpha = dx1 - x3 dx2.
    const GeometricSection s(ObjectKind::ContactPair3D, {1L, -x(3), 0L, 1L, 0L, 0L});
    const auto sys = medolaghi_equations(s);
    ASSERT_EQ(sys.size(), 6U);
    LinearJetEquation a2(3);
    a2.add(xi(3, 1, {2}), Expression(1L));
    a2.add(xi(3, 2, {2}), -x(3));
    a2.add(xi(3, 3), Expression(-1L));
    EXPECT_EQ(sys[1], a2);
    for (const auto& eq : sys) EXPECT_EQ(eq.order(), 1);
}

TEST(Medolaghi, FlatSystemsHaveFiniteType) {
    for (const auto& s : {metric(1L, 1L, 0L), product(0L, 0L, 1L)}) {
        const auto sys = medolaghi_equations(s);
        EXPECT_EQ(symbol_dimension(sys, 1), 1);
        EXPECT_EQ(symbol_dimension(prolong(sys, 1), 2), 0);
    }
}

TEST(SameEquations, Examples) {
    EXPECT_TRUE(same_equations(metric(1L, 1L, 0L), metric(5L, 5L, 0L)));
    EXPECT_FALSE(same_equations(product(0L, 0L, 1L), product(0L, 0L, Expression(1L) / pow(x(2) - x(1), 2))));
    EXPECT_TRUE(same_equations(product(0L, 0L, 1L), product(0L, 0L, 1L)));
    EXPECT_THROW((void)same_equations(metric(1L, 1L, 0L), product(0L, 0L, 1L)), KindMismatch);
}

TEST(SameEquations, ConstantScalingOnly) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        const auto g = testing::random_metric(rng);
        const Expression lambda(testing::random_rational(rng));
        const auto& c = g.components();
        EXPECT_TRUE(same_equations(g, metric(lambda * c[0], lambda * c[1], lambda * c[2])));
        const Expression f = x(1) + Expression(2L);
        EXPECT_FALSE(same_equations(g, metric(f * c[0], f * c[1], f * c[2])));

        const auto p = testing::random_product_case(rng).section;
        const auto& w = p.components();
        EXPECT_TRUE(same_equations(p, product(w[0], w[1], lambda * w[2])));
        EXPECT_FALSE(same_equations(p, product(w[0], w[1], f * w[2])));
    }
}

TEST(SameEquations, EquivalenceRelation) {
    std::mt19937 rng(23);
    std::vector<GeometricSection> pool;
    for (int i = 0; i < 3; ++i) {
        const auto g = testing::random_metric(rng);
        pool.push_back(g);
        const auto& c = g.components();
        pool.push_back(metric(Expression(3L) * c[0], Expression(3L) * c[1], Expression(3L) * c[2]));
    }
    for (const auto& a : pool) {
        EXPECT_TRUE(same_equations(a, a));
        for (const auto& b : pool) {
            EXPECT_EQ(same_equations(a, b), same_equations(b, a));
            for (const auto& c : pool)
                if (same_equations(a, b) && same_equations(b, c)) EXPECT_TRUE(same_equations(a, c));
        }
    }
}

}  // namespace
}  // namespace vessiot
