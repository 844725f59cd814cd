#include "vessiot/structure.hpp"

#include "vessiot/curvature.hpp"
#include "vessiot/errors.hpp"
#include "vessiot/linear_algebra.hpp"

namespace vessiot {
namespace {

void record(StructureReport& report, const std::string& name, const Expression& value, bool& ok) {
    if (value.is_constant()) {
        report.constants.push_back({name, value});
        return;
    }
    ok = false;
    report.quantities.push_back({name, value});
    if (!report.residual) report.residual = value;
}

void finish(StructureReport& report, bool ok) {
    for (const auto& j : report.jacobi_residuals)
        if (!j.value.is_zero()) ok = false;
    report.integrable = ok;
}

std::string point_text(const std::map<Symbol, Rational>& point) {
    std::string out = "(";
    bool first = true;
    for (const auto& [s, v] : point) {
        if (!first) out += ", ";
        out += s.name() + " = " + v.get_str();
        first = false;
    }
    return out + ")";
}

const Expression& required_constant(const StructureReport& r, std::string_view name, std::string_view side) {
    const Expression* c = r.constant(name);
    if (c == nullptr) throw NotIntegrable(std::string(side) + " section has no constant " + std::string(name));
    return *c;
}

}  // namespace

StructureReport affine_constant_1d(const Expression& alpha, const Expression& gamma) {
    if (alpha.is_zero()) throw DegenerateSection("alpha vanishes identically");
    StructureReport report;
    report.kind = ObjectKind::OneForm1D;
    bool ok = true;
    record(report, "c", (diff(alpha, 1) - gamma * alpha) / (alpha * alpha), ok);
    finish(report, ok);
    return report;
}

StructureReport isometry_constant_1d(const Expression& omega, const Expression& gamma,
                                     const std::optional<Expression>& sigma) {
    if (omega.is_zero()) throw DegenerateSection("omega vanishes identically");
    Expression root;
    if (sigma) {
        if (!(*sigma * *sigma == omega))
            throw PreconditionViolation("sigma^2 != omega for sigma = " + sigma->to_string());
        root = *sigma;
    } else {
        auto found = rational_sqrt(omega);
        if (!found) throw NotAPerfectSquare(omega.to_string() + " is not the square of a rational expression");
        root = *found;
    }
    StructureReport report;
    report.kind = ObjectKind::OneForm1D;
    report.quantities.push_back({"sigma", root});
    bool ok = true;
    record(report, "c'", (diff(omega, 1) - Expression(2L) * omega * gamma) / (root * root * root), ok);
    finish(report, ok);
    return report;
}

Expression projective_residual_1d(const Expression& gamma, const Expression& nu) {
    return diff(gamma, 1) - gamma * gamma / Expression(2L) - nu;
}

std::array<Expression, 6> solve_intermediate_product(const GeometricSection& section) {
    if (section.kind() != ObjectKind::ProductTriple2D)
        throw KindMismatch("expected PRODUCT_TRIPLE_2D, got " + std::string(kind_name(section.kind())));
    if (nondegeneracy(section).is_zero()) throw DegenerateSection("w3 (1 - w1 w2) vanishes identically");
    const auto& c = section.components();
    const Expression& w1 = c[0];
    const Expression& w2 = c[1];
    const Expression& w3 = c[2];
    const Expression one(1L);
    const Expression zero;
    // Unknowns (w4, w5, w6, w7, w8, w9).
    const ExprMatrix a{
        {-w1, one, zero, zero, zero, zero},
        {zero, -w1, one, zero, zero, zero},
        {zero, zero, zero, zero, -w2, one},
        {zero, zero, zero, -w2, one, zero},
        {w3, zero, zero, zero, w3, zero},
        {zero, w3, zero, w3, zero, zero},
    };
    const std::vector<Expression> b{diff(w1, 1), diff(w1, 2), diff(w2, 1), diff(w2, 2), diff(w3, 1), diff(w3, 2)};
    auto x = solve(a, b);
    if (!x) throw DegenerateSection("intermediate system is singular");
    std::array<Expression, 6> out;
    for (std::size_t i = 0; i < 6; ++i) out[i] = (*x)[i];
    return out;
}

StructureReport product_constants(const GeometricSection& section) {
    const auto w = solve_intermediate_product(section);
    const auto& c = section.components();
    const Expression denom = c[2] * (Expression(1L) - c[0] * c[1]);
    const Expression c1 = (diff(w[0], 2) - diff(w[1], 1)) / denom;
    const Expression c2 = (diff(w[3], 1) - diff(w[4], 2)) / denom;

    StructureReport report;
    report.kind = ObjectKind::ProductTriple2D;
    for (std::size_t i = 0; i < 6; ++i) report.quantities.push_back({"w" + std::to_string(i + 4), w[i]});
    report.jacobi_residuals.push_back({"c'-c''", c1 - c2});

    bool ok = true;
    if (c1.is_constant() && c2.is_constant() && c1 == c2) {
        report.constants.push_back({"c", c1});
    } else {
        record(report, "c'", c1, ok);
        record(report, "c''", c2, ok);
    }
    finish(report, ok);
    return report;
}

StructureReport scaling_law(const StructureReport& report, const Expression& a) {
    if (a.is_zero()) throw ZeroScale("scale factor is zero");
    if (!a.is_constant()) throw PreconditionViolation("scale factor must be constant, got " + a.to_string());
    std::string_view target;
    if (report.kind == ObjectKind::ProductTriple2D) {
        target = "c";
    } else if (report.kind == ObjectKind::Metric2D) {
        target = "c1";
    } else {
        throw PreconditionViolation("no scaling law for " + std::string(kind_name(report.kind)));
    }
    StructureReport out = report;
    for (auto& c : out.constants)
        if (c.name == target) c.value = c.value / a;
    return out;
}

const char* status_name(EquivalenceVerdict::Status status) {
    return status == EquivalenceVerdict::Status::Obstructed ? "Obstructed" : "NecessaryConditionsPass";
}

EquivalenceVerdict equivalence_gate(const GeometricSection& left, const GeometricSection& right,
                                    const std::optional<std::map<Symbol, Rational>>& sample_point) {
    if (left.kind() != right.kind())
        throw KindMismatch(std::string(kind_name(left.kind())) + " vs " + std::string(kind_name(right.kind())));
    EquivalenceVerdict verdict;
    verdict.sample_point = sample_point ? *sample_point : default_sample_point(left.n());
    verdict.left = compute_structure(left);
    verdict.right = compute_structure(right);
    if (!verdict.left.integrable) throw NotIntegrable("left section is not integrable");
    if (!verdict.right.integrable) throw NotIntegrable("right section is not integrable");

    auto zero_mismatch = [&verdict](std::string_view name) {
        const Expression& l = required_constant(verdict.left, name, "left");
        const Expression& r = required_constant(verdict.right, name, "right");
        if (l.is_zero() != r.is_zero())
            verdict.reasons.push_back("0 = " + std::string(name) + "*a impossible for a != 0 (left " +
                                      std::string(name) + " = " + l.to_string() + ", right " + std::string(name) +
                                      " = " + r.to_string() + ")");
    };

    switch (left.kind()) {
        case ObjectKind::ProductTriple2D:
            zero_mismatch("c");
            break;
        case ObjectKind::Metric2D: {
            const Expression dl = Metric2D::from_section(left).det();
            const Expression dr = Metric2D::from_section(right).det();
            try {
                const auto vl = dl.evaluate(verdict.sample_point).rational_value();
                const auto vr = dr.evaluate(verdict.sample_point).rational_value();
                if (!vl || !vr) {
                    verdict.notes.push_back("determinant sign test skipped: parameters remain at the sample point");
                } else if (sgn(*vl) * sgn(*vr) < 0) {
                    const Rational ratio = *vr / *vl;
                    verdict.reasons.push_back("Delta^2 = det(right)/det(left) = " + ratio.get_str() +
                                              " < 0 at " + point_text(verdict.sample_point));
                }
            } catch (const SingularPoint&) {
                verdict.notes.push_back("determinant sign test skipped: singular sample point");
            }
            zero_mismatch("c1");
            break;
        }
        default:
            verdict.notes.push_back("no obstruction tests for " + std::string(kind_name(left.kind())));
            break;
    }
    verdict.status = verdict.reasons.empty() ? EquivalenceVerdict::Status::NecessaryConditionsPass
                                             : EquivalenceVerdict::Status::Obstructed;
    return verdict;
}

StructureReport contact_constants(const DifferentialForm& alpha, const DifferentialForm& beta) {
    if (alpha.n() != 3 || beta.n() != 3 || alpha.degree() != 1 || beta.degree() != 2)
        throw PreconditionViolation("contact pair needs a 1-form and a 2-form on n = 3");
    const DifferentialForm volume = wedge(alpha, beta);
    if (volume.is_zero()) throw DegeneratePair("alpha ^ beta vanishes identically");

    const DifferentialForm dalpha = exterior_derivative(alpha);
    Expression c1;
    if (!dalpha.is_zero()) {
        const auto& [mask, b] = *beta.components().begin();
        auto it = dalpha.components().find(mask);
        c1 = it == dalpha.components().end() ? Expression{} : it->second / b;
        if (!(dalpha - beta * c1).is_zero())
            throw NotProportional("d alpha = " + dalpha.to_string() + " is not a multiple of beta");
    }
    const DifferentialForm dbeta = exterior_derivative(beta);
    const Expression c2 = dbeta.coefficient({1, 2, 3}) / volume.coefficient({1, 2, 3});

    StructureReport report;
    report.kind = ObjectKind::ContactPair3D;
    report.quantities.push_back({"alpha^beta", volume.coefficient({1, 2, 3})});
    bool ok = true;
    record(report, "c'", c1, ok);
    record(report, "c''", c2, ok);
    report.jacobi_residuals.push_back({"c'c''", c1 * c2});
    finish(report, ok);
    return report;
}

std::pair<DifferentialForm, DifferentialForm> contact_forms(const GeometricSection& section) {
    if (section.kind() != ObjectKind::ContactPair3D)
        throw KindMismatch("expected CONTACT_PAIR_3D, got " + std::string(kind_name(section.kind())));
    const auto& c = section.components();
    DifferentialForm alpha = DifferentialForm::one_form({c[0], c[1], c[2]});
    DifferentialForm beta(3, 2);
    beta.add({2, 3}, c[3]);
    beta.add({3, 1}, c[4]);
    beta.add({1, 2}, c[5]);
    return {alpha, beta};
}

StructureReport compute_structure(const GeometricSection& section) {
    switch (section.kind()) {
        case ObjectKind::OneForm1D: {
            const Expression& alpha = section.components()[0];
            const Expression* g = section.find_auxiliary("gamma");
            const Expression gamma = g ? *g : Expression{};
            StructureReport report = affine_constant_1d(alpha, gamma);
            const StructureReport iso = isometry_constant_1d(alpha * alpha, gamma, alpha);
            bool ok = report.integrable;
            if (const Expression* c = iso.constant("c'")) {
                report.constants.push_back({"c'", *c});
            } else {
                record(report, "c'", *iso.quantity("c'"), ok);
            }
            finish(report, ok);
            return report;
        }
        case ObjectKind::Christoffel1D: {
            const Expression& gamma = section.components()[0];
            StructureReport report;
            report.kind = ObjectKind::Christoffel1D;
            bool ok = true;
            if (const Expression* alpha = section.find_auxiliary("alpha")) {
                const StructureReport affine = affine_constant_1d(*alpha, gamma);
                report.constants = affine.constants;
                report.quantities = affine.quantities;
                report.residual = affine.residual;
                ok = affine.integrable;
            }
            if (const Expression* nu = section.find_auxiliary("nu")) {
                report.jacobi_residuals.push_back({"projective", projective_residual_1d(gamma, *nu)});
            }
            if (report.constants.empty() && report.jacobi_residuals.empty() && !report.residual)
                report.notes.emplace_back("a 1D connection alone carries no structure constant");
            finish(report, ok);
            return report;
        }
        case ObjectKind::Metric2D:
            return metric_constants(Metric2D::from_section(section));
        case ObjectKind::ProductTriple2D:
            return product_constants(section);
        case ObjectKind::Christoffel2D: {
            const CurvatureData data = affine_flatness(Connection2D::from_section(section));
            StructureReport report;
            report.kind = ObjectKind::Christoffel2D;
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    report.jacobi_residuals.push_back(
                        {"rho" + std::to_string(k) + "_" + std::to_string(l) + "12", data.rho(k, l, 1, 2)});
            finish(report, true);
            return report;
        }
        case ObjectKind::ContactPair3D: {
            if (nondegeneracy(section).is_zero()) throw DegeneratePair("alpha ^ beta vanishes identically");
            const auto [alpha, beta] = contact_forms(section);
            return contact_constants(alpha, beta);
        }
    }
    throw PreconditionViolation("unknown object kind");
}

}  // namespace vessiot
