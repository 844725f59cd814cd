#pragma once

// Random inputs and independent oracles shared by the unit and acceptance tests.

#include <array>
#include <random>
#include <vector>

#include "vessiot/expression.hpp"
#include "vessiot/section.hpp"

namespace vessiot::testing {

inline Expression x(int i) { return Expression::coordinate(i); }

/// Small dense-ish polynomial with integer coefficients in [-3, 3].
inline Expression random_polynomial(std::mt19937& rng, int n, int max_degree, int terms = 3) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> var(1, n);
    std::uniform_int_distribution<int> deg(0, max_degree);
    Expression out;
    for (int t = 0; t < terms; ++t) {
        Expression mono(static_cast<long>(coeff(rng)));
        const int d = deg(rng);
        for (int k = 0; k < d; ++k) mono *= x(var(rng));
        out += mono;
    }
    return out;
}

inline Rational random_rational(std::mt19937& rng, bool nonzero = true) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (;;) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        if (!nonzero || r != 0) return r;
    }
}

/// p / q with q never identically zero.
inline Expression random_rational_function(std::mt19937& rng, int n, int max_degree = 2) {
    Expression den;
    while (den.is_zero()) den = random_polynomial(rng, n, max_degree, 2) + Expression(1L);
    return random_polynomial(rng, n, max_degree) / den;
}

/// Random rational point avoiding small integers, for numeric spot checks.
inline std::map<Symbol, Rational> random_point(std::mt19937& rng, int n) {
    std::map<Symbol, Rational> p;
    std::uniform_int_distribution<int> num(-50, 50);
    for (int i = 1; i <= n; ++i) {
        Rational r(2 * num(rng) + 1, 7 + 2 * i);
        r.canonicalize();
        p.emplace(Symbol::coordinate(i), r);
    }
    return p;
}

inline std::map<Symbol, double> to_double(const std::map<Symbol, Rational>& p) {
    std::map<Symbol, double> out;
    for (const auto& [s, v] : p) out.emplace(s, v.get_d());
    return out;
}

/// Pullback of the product section (0, 0, u) along phi = (phi1, phi2),
/// computed from the finite transformation law: with M = diag(1, u(phi)) D phi,
/// w1 = M12 / M11, w2 = M21 / M22, w3 = M11 M22. Quotients of the structure
/// equations are invariant, so the result carries the same constant as the model.
inline GeometricSection pull_back_product(const Expression& u, const Expression& phi1, const Expression& phi2,
                                          std::vector<std::string> params = {}) {
    const Expression u_phi = u.substitute({{Symbol::coordinate(1), phi1}, {Symbol::coordinate(2), phi2}});
    const Expression m11 = diff(phi1, 1);
    const Expression m12 = diff(phi1, 2);
    const Expression m21 = u_phi * diff(phi2, 1);
    const Expression m22 = u_phi * diff(phi2, 2);
    return GeometricSection(ObjectKind::ProductTriple2D, {m12 / m11, m21 / m22, m11 * m22}, {}, std::move(params));
}

/// A random constant-quotient product section together with the constant it
/// must carry: the model (0, 0, k/(x2 - x1)^2) has c = -2/k and (0, 0, k) has c = 0.
struct ProductCase {
    GeometricSection section;
    Expression expected_c;
};

inline ProductCase random_product_case(std::mt19937& rng) {
    const Rational k = random_rational(rng);
    const bool projective = std::bernoulli_distribution(0.6)(rng);
    const Expression u = projective ? Expression(k) / pow(x(2) - x(1), 2) : Expression(k);
    const Expression expected = projective ? Expression(Rational(-2) / k) : Expression{};
    std::uniform_int_distribution<int> small(-2, 2);
    int r = 0;
    int s = 0;
    while (r == 0 && s == 0) {
        r = small(rng);
        s = small(rng);
    }
    const Expression phi1 = x(1) + Expression(static_cast<long>(r)) * x(2) * x(2);
    const Expression phi2 = x(2) + Expression(static_cast<long>(s)) * x(1) * x(1);
    return {pull_back_product(u, phi1, phi2), expected};
}

/// Random nondegenerate 2D metric with rational entries.
inline GeometricSection random_metric(std::mt19937& rng) {
    for (;;) {
        const Expression w11 = random_polynomial(rng, 2, 2, 2) * random_polynomial(rng, 2, 0, 1) + Expression(2L);
        const Expression w22 = random_polynomial(rng, 2, 2, 2) + Expression(3L);
        const Expression w12 = random_polynomial(rng, 2, 1, 2);
        if ((w11 * w22 - w12 * w12).is_zero()) continue;
        return GeometricSection(ObjectKind::Metric2D, {w11, w22, w12});
    }
}

}  // namespace vessiot::testing
