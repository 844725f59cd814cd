#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <functional>
#include <random>

#include "generators.hpp"
#include "vessiot/curvature.hpp"
#include "vessiot/errors.hpp"
#include "vessiot/structure.hpp"

namespace vessiot {
namespace {

using testing::x;

const Expression kZero{};
const Expression kOne(1L);

Metric2D half_plane() {
    const Expression h = kOne / (x(2) * x(2));
    return Metric2D(h, h, kZero);
}

// c1 whether or not it came out constant.
Expression c1_of(const StructureReport& r) {
    if (const Expression* c = r.constant("c1")) return *c;
    if (const Expression* q = r.quantity("c1")) return *q;
    throw std::runtime_error("report carries no c1");
}

TEST(Metric2D, InverseAndDeterminant) {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = testing::random_metric(rng);
        const Metric2D g = Metric2D::from_section(s);
        const auto& c = s.components();
        EXPECT_EQ(g.det(), c[0] * c[1] - c[2] * c[2]);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                Expression sum;
                for (int r = 1; r <= 2; ++r) sum += g.inverse(i, r) * g(r, j);
                EXPECT_EQ(sum, Expression(i == j ? 1L : 0L));
            }
    }
    EXPECT_THROW(Metric2D(x(1), x(1), x(1)), DegenerateMetric);
}

TEST(Christoffel, Examples) {
    const Connection2D flat = christoffel(Metric2D(kOne, kOne, kZero));
    for (const auto& g : flat.components()) EXPECT_TRUE(g.is_zero());
    const Connection2D strange = christoffel(Metric2D(kZero, kZero, kOne));
    for (const auto& g : strange.components()) EXPECT_TRUE(g.is_zero());

    const Connection2D hp = christoffel(half_plane());
    EXPECT_EQ(hp(1, 1, 2), Expression(-1L) / x(2));
    EXPECT_EQ(hp(1, 2, 1), Expression(-1L) / x(2));
    EXPECT_EQ(hp(2, 1, 1), kOne / x(2));
    EXPECT_EQ(hp(2, 2, 2), Expression(-1L) / x(2));
    EXPECT_TRUE(hp(1, 1, 1).is_zero());
    EXPECT_TRUE(hp(1, 2, 2).is_zero());
    EXPECT_TRUE(hp(2, 1, 2).is_zero());
}

TEST(Christoffel, TraceIdentity) {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const Metric2D g = Metric2D::from_section(testing::random_metric(rng));
        const Connection2D c = christoffel(g);
        for (int i = 1; i <= 2; ++i) {
            Expression trace;
            Expression expected;
            for (int r = 1; r <= 2; ++r) {
                trace += c(r, r, i);
                for (int s = 1; s <= 2; ++s) expected += g.inverse(r, s) * diff(g(r, s), i);
            }
            EXPECT_EQ(trace, expected / Expression(2L));
            // Same thing as half the log-derivative of det.
            EXPECT_EQ(trace, diff(g.det(), i) / (Expression(2L) * g.det()));
        }
    }
}

TEST(Riemann, Examples) {
    EXPECT_TRUE(riemann(Connection2D()).is_flat());
    const CurvatureData hp = riemann(christoffel(half_plane()));
    const Expression minus = Expression(-1L) / (x(2) * x(2));
    EXPECT_EQ(hp.ricci[0][0], minus);
    EXPECT_EQ(hp.ricci[1][1], minus);
    EXPECT_TRUE(hp.ricci[0][1].is_zero());
    EXPECT_TRUE(hp.ricci[1][0].is_zero());

    Connection2D twisted;
    twisted.set(1, 1, 1, x(2));
    const CurvatureData t = riemann(twisted);
    EXPECT_EQ(t.phi[0][1], Expression(-1L));
    EXPECT_EQ(t.phi[1][0], kOne);
}

TEST(Riemann, ComponentIdentitiesInDimensionTwo) {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        std::array<Expression, 6> comps;
        for (auto& c : comps) c = testing::random_rational_function(rng, 2, 1);
        const CurvatureData d = riemann(Connection2D(comps));
        EXPECT_EQ(d.ricci[0][0], d.rho(2, 1, 2, 1));
        EXPECT_EQ(d.ricci[0][1], d.rho(1, 1, 1, 2));
        EXPECT_EQ(d.ricci[1][0], d.rho(2, 2, 2, 1));
        EXPECT_EQ(d.ricci[1][1], d.rho(1, 2, 1, 2));
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l)
                for (int i = 1; i <= 2; ++i)
                    for (int j = 1; j <= 2; ++j) EXPECT_EQ(d.rho(k, l, i, j), -d.rho(k, l, j, i));
        EXPECT_TRUE((d.phi[0][1] + d.phi[1][0]).is_zero());
        EXPECT_EQ(d.sym[0][1], d.sym[1][0]);
        // phi_ij = d_i g^r_rj - d_j g^r_ri.
        const Connection2D c(comps);
        EXPECT_EQ(d.phi[0][1], diff(c(1, 1, 2) + c(2, 2, 2), 1) - diff(c(1, 1, 1) + c(2, 2, 1), 2));
    }
}

TEST(Riemann, LeviCivitaHasNoAntisymmetricPart) {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 20; ++trial) {
        const CurvatureData d = riemann(christoffel(Metric2D::from_section(testing::random_metric(rng))));
        EXPECT_TRUE(d.phi[0][1].is_zero());
        EXPECT_TRUE(d.phi[1][0].is_zero());
    }
}

TEST(MetricConstants, Examples) {
    const auto flat = metric_constants(Metric2D(kOne, kOne, kZero));
    EXPECT_TRUE(flat.integrable);
    EXPECT_EQ(*flat.constant("c1"), kZero);
    EXPECT_EQ(*flat.constant("c2"), kZero);

    const auto hp = metric_constants(half_plane());
    EXPECT_TRUE(hp.integrable);
    EXPECT_EQ(*hp.constant("c1"), Expression(-1L));
    EXPECT_EQ(*hp.constant("c2"), kZero);

    const auto strange = metric_constants(Metric2D(kZero, kZero, kOne));
    EXPECT_EQ(*strange.constant("c1"), kZero);
    EXPECT_EQ(*strange.quantity("det"), Expression(-1L));

    // Round sphere in stereographic coordinates: c1 = +1.
    const Expression s = Expression(4L) / pow(kOne + x(1) * x(1) + x(2) * x(2), 2);
    EXPECT_EQ(*metric_constants(Metric2D(s, s, kZero)).constant("c1"), kOne);
}

TEST(MetricConstants, NonConstantCurvature) {
    const Expression w = kOne + x(1) * x(1);
    const auto r = metric_constants(Metric2D(w, w, kZero));
    EXPECT_FALSE(r.integrable);
    ASSERT_TRUE(r.residual.has_value());
    EXPECT_FALSE(r.residual->is_constant());
}

TEST(MetricConstants, Scaling) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 8; ++trial) {
        const auto s = testing::random_metric(rng);
        const Expression lambda(testing::random_rational(rng));
        const auto& c = s.components();
        const auto base = metric_constants(Metric2D::from_section(s));
        const auto scaled = metric_constants(Metric2D(lambda * c[0], lambda * c[1], lambda * c[2]));
        EXPECT_EQ(c1_of(scaled), c1_of(base) / lambda);
    }
    const auto hp = metric_constants(half_plane());
    EXPECT_EQ(*scaling_law(hp, Expression(3L)).constant("c1"), Expression(Rational(-1, 3)));
}

TEST(ConnectionConstants, SquaredSecondConstant) {
    // Ricci of g^1_11 = x2 is -dx1 (x) dx2, so sym = -1/2 (dx1 dx2 + dx2 dx1).
    Connection2D twisted;
    twisted.set(1, 1, 1, x(2));
    const auto r = connection_constants(Metric2D(kZero, kZero, kOne), twisted);
    EXPECT_EQ(*r.constant("c1"), Expression(Rational(-1, 2)));
    ASSERT_NE(r.constant("c2^2"), nullptr);
    EXPECT_EQ(*r.constant("c2^2"), Expression(Rational(-1, 4)));
    EXPECT_TRUE(r.integrable);

    const auto lc = connection_constants(half_plane(), christoffel(half_plane()));
    EXPECT_EQ(*lc.constant("c1"), Expression(-1L));
    EXPECT_EQ(*lc.constant("c2"), kZero);
}

TEST(ConnectionConstants, NotProportional) {
    Connection2D twisted;
    twisted.set(1, 1, 1, x(2));
    const CurvatureData d = riemann(twisted);
    ASSERT_FALSE(d.sym[0][1].is_zero());
    EXPECT_THROW((void)connection_constants(Metric2D(kOne, kOne, kZero), twisted), NotProportional);
}

TEST(AffineFlatness, Examples) {
    EXPECT_TRUE(affine_flatness(Connection2D()).is_flat());
    const CurvatureData hp = affine_flatness(christoffel(half_plane()));
    EXPECT_FALSE(hp.is_flat());
    EXPECT_EQ(hp.ricci[0][0], Expression(-1L) / (x(2) * x(2)));
    // A connection with constant coefficients in affine coordinates of a
    // flat chart, pushed through x -> x: g^1_11 = 1 is flat.
    Connection2D c;
    c.set(1, 1, 1, kOne);
    EXPECT_TRUE(affine_flatness(c).is_flat());
}

// Finite-difference oracle: everything below works on doubles only.
using NumericMetric = std::function<std::array<std::array<double, 2>, 2>(double, double)>;

std::array<double, 8> numeric_christoffel(const NumericMetric& g, double x1, double x2, double h) {
    auto d = [&](int k, int i, int j) {
        const auto p = k == 1 ? g(x1 + h, x2) : g(x1, x2 + h);
        const auto m = k == 1 ? g(x1 - h, x2) : g(x1, x2 - h);
        return (p[i][j] - m[i][j]) / (2 * h);
    };
    const auto w = g(x1, x2);
    const double det = w[0][0] * w[1][1] - w[0][1] * w[1][0];
    const double inv[2][2] = {{w[1][1] / det, -w[0][1] / det}, {-w[1][0] / det, w[0][0] / det}};
    std::array<double, 8> out{};
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double s = 0;
                for (int r = 0; r < 2; ++r) s += inv[k][r] * (d(i + 1, r, j) + d(j + 1, i, r) - d(r + 1, i, j));
                out[static_cast<std::size_t>(4 * k + 2 * i + j)] = s / 2;
            }
    return out;
}

TEST(NumericOracle, HalfPlaneRicciAtSamplePoint) {
    const NumericMetric g = [](double, double x2) {
        const double v = 1.0 / (x2 * x2);
        return std::array<std::array<double, 2>, 2>{{{v, 0.0}, {0.0, v}}};
    };
    const double x1 = 2.0;
    const double x2 = 3.0;
    const double h = 1e-4;
    auto G = [&](double a, double b) { return numeric_christoffel(g, a, b, h); };
    auto at = [](const std::array<double, 8>& c, int k, int i, int j) {
        return c[static_cast<std::size_t>(4 * (k - 1) + 2 * (i - 1) + (j - 1))];
    };
    const auto c0 = G(x1, x2);
    const double d2_g211 = (at(G(x1, x2 + h), 2, 1, 1) - at(G(x1, x2 - h), 2, 1, 1)) / (2 * h);
    const double d1_g212 = (at(G(x1 + h, x2), 2, 1, 2) - at(G(x1 - h, x2), 2, 1, 2)) / (2 * h);
    // rho_11 = rho^2_{1,21}.
    double rho11 = d2_g211 - d1_g212;
    for (int r = 1; r <= 2; ++r) rho11 += at(c0, r, 1, 1) * at(c0, 2, r, 2) - at(c0, r, 1, 2) * at(c0, 2, r, 1);

    const CurvatureData symbolic = riemann(christoffel(half_plane()));
    const std::map<Symbol, Rational> point{{Symbol::coordinate(1), 2}, {Symbol::coordinate(2), 3}};
    const double exact = symbolic.ricci[0][0].evaluate(point).rational_value()->get_d();
    EXPECT_DOUBLE_EQ(exact, -1.0 / 9.0);
    EXPECT_NEAR(rho11, exact, 1e-6 * std::abs(exact));
}

}  // namespace
}  // namespace vessiot
