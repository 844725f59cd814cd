#include "vessiot/medolaghi.hpp"

#include <array>
#include <set>

#include "vessiot/errors.hpp"
#include "vessiot/linear_algebra.hpp"

namespace vessiot {
namespace {

// xi^r d_r f
void add_transport(LinearJetEquation& eq, const Expression& f) {
    for (int r = 1; r <= eq.n(); ++r) eq.add(xi(eq.n(), r), diff(f, r));
}

std::vector<LinearJetEquation> one_form_1d(const GeometricSection& s) {
    const Expression& alpha = s.components()[0];
    LinearJetEquation eq(1);
    eq.add(xi(1, 1, {1}), alpha);
    add_transport(eq, alpha);
    return {eq};
}

std::vector<LinearJetEquation> christoffel_1d(const GeometricSection& s) {
    const Expression& gamma = s.components()[0];
    LinearJetEquation eq(1);
    eq.add(xi(1, 1, {1, 1}), Expression(1L));
    eq.add(xi(1, 1, {1}), gamma);
    add_transport(eq, gamma);
    return {eq};
}

std::vector<LinearJetEquation> metric_2d(const GeometricSection& s) {
    const auto& c = s.components();
    // w[i][j] from the stored (w11, w22, w12).
    const std::array<std::array<Expression, 2>, 2> w{{{c[0], c[2]}, {c[2], c[1]}}};
    std::vector<LinearJetEquation> out;
    for (const auto& [i, j] : std::array<std::pair<int, int>, 3>{{{1, 1}, {2, 2}, {1, 2}}}) {
        LinearJetEquation eq(2);
        for (int r = 1; r <= 2; ++r) {
            eq.add(xi(2, r, {i}), w[r - 1][j - 1]);
            eq.add(xi(2, r, {j}), w[i - 1][r - 1]);
        }
        add_transport(eq, w[i - 1][j - 1]);
        out.push_back(std::move(eq));
    }
    return out;
}

std::vector<LinearJetEquation> product_triple_2d(const GeometricSection& s) {
    const auto& c = s.components();
    const Expression& w1 = c[0];
    const Expression& w2 = c[1];
    const Expression& w3 = c[2];
    LinearJetEquation o1(2);
    o1.add(xi(2, 1, {2}), Expression(1L));
    o1.add(xi(2, 2, {2}), w1);
    o1.add(xi(2, 1, {1}), -w1);
    o1.add(xi(2, 2, {1}), -(w1 * w1));
    add_transport(o1, w1);

    LinearJetEquation o2(2);
    o2.add(xi(2, 2, {1}), Expression(1L));
    o2.add(xi(2, 1, {1}), w2);
    o2.add(xi(2, 2, {2}), -w2);
    o2.add(xi(2, 1, {2}), -(w2 * w2));
    add_transport(o2, w2);

    LinearJetEquation o3(2);
    o3.add(xi(2, 1, {1}), w3);
    o3.add(xi(2, 2, {2}), w3);
    o3.add(xi(2, 2, {1}), w1 * w3);
    o3.add(xi(2, 1, {2}), w2 * w3);
    add_transport(o3, w3);
    return {o1, o2, o3};
}

std::vector<LinearJetEquation> christoffel_2d(const GeometricSection& s) {
    const auto& c = s.components();
    // g(k, i, j) from the stored (g111, g112, g122, g211, g212, g222).
    auto g = [&c](int k, int i, int j) -> const Expression& {
        if (i > j) std::swap(i, j);
        const int slot = (i == 1 && j == 1) ? 0 : (i == 1 ? 1 : 2);
        return c[static_cast<std::size_t>(3 * (k - 1) + slot)];
    };
    std::vector<LinearJetEquation> out;
    for (int k = 1; k <= 2; ++k)
        for (const auto& [i, j] : std::array<std::pair<int, int>, 3>{{{1, 1}, {1, 2}, {2, 2}}}) {
            LinearJetEquation eq(2);
            eq.add(xi(2, k, {i, j}), Expression(1L));
            for (int r = 1; r <= 2; ++r) {
                eq.add(xi(2, r, {i}), g(k, r, j));
                eq.add(xi(2, r, {j}), g(k, i, r));
                eq.add(xi(2, k, {r}), -g(r, i, j));
            }
            add_transport(eq, g(k, i, j));
            out.push_back(std::move(eq));
        }
    return out;
}

std::vector<LinearJetEquation> contact_pair_3d(const GeometricSection& s) {
    const auto& c = s.components();
    const std::array<Expression, 3> a{c[0], c[1], c[2]};
    // Antisymmetric beta[i][j] from (b23, b31, b12).
    std::array<std::array<Expression, 3>, 3> b{};
    b[1][2] = c[3];
    b[2][1] = -c[3];
    b[2][0] = c[4];
    b[0][2] = -c[4];
    b[0][1] = c[5];
    b[1][0] = -c[5];

    std::vector<LinearJetEquation> out;
    for (int i = 1; i <= 3; ++i) {
        LinearJetEquation eq(3);
        for (int r = 1; r <= 3; ++r) eq.add(xi(3, r, {i}), a[r - 1]);
        add_transport(eq, a[i - 1]);
        out.push_back(std::move(eq));
    }
    for (const auto& [i, j] : std::array<std::pair<int, int>, 3>{{{2, 3}, {3, 1}, {1, 2}}}) {
        LinearJetEquation eq(3);
        for (int r = 1; r <= 3; ++r) {
            eq.add(xi(3, r, {i}), b[r - 1][j - 1]);
            eq.add(xi(3, r, {j}), b[i - 1][r - 1]);
        }
        add_transport(eq, b[i - 1][j - 1]);
        out.push_back(std::move(eq));
    }
    return out;
}

ExprMatrix as_matrix(const std::vector<LinearJetEquation>& system, const std::vector<JetVariable>& vars) {
    ExprMatrix m;
    for (const auto& eq : system) {
        std::vector<Expression> row;
        row.reserve(vars.size());
        for (const auto& v : vars) row.push_back(eq.coefficient(v));
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

std::vector<LinearJetEquation> medolaghi_equations(const GeometricSection& section) {
    if (nondegeneracy(section).is_zero())
        throw DegenerateSection(std::string(kind_name(section.kind())) + " section is degenerate: witness vanishes identically");
    switch (section.kind()) {
        case ObjectKind::OneForm1D:
            return one_form_1d(section);
        case ObjectKind::Christoffel1D:
            return christoffel_1d(section);
        case ObjectKind::Metric2D:
            return metric_2d(section);
        case ObjectKind::ProductTriple2D:
            return product_triple_2d(section);
        case ObjectKind::Christoffel2D:
            return christoffel_2d(section);
        case ObjectKind::ContactPair3D:
            return contact_pair_3d(section);
    }
    throw PreconditionViolation("unknown object kind");
}

bool same_equations(const GeometricSection& a, const GeometricSection& b) {
    if (a.kind() != b.kind())
        throw KindMismatch(std::string(kind_name(a.kind())) + " vs " + std::string(kind_name(b.kind())));
    const auto sa = medolaghi_equations(a);
    const auto sb = medolaghi_equations(b);
    std::set<JetVariable, JetOrder> var_set;
    for (const auto* sys : {&sa, &sb})
        for (const auto& eq : *sys)
            for (const auto& [v, c] : eq.terms()) var_set.insert(v);
    const std::vector<JetVariable> vars(var_set.begin(), var_set.end());
    return row_reduce(as_matrix(sa, vars)) == row_reduce(as_matrix(sb, vars));
}

}  // namespace vessiot
