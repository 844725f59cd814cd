#include "vessiot/curvature.hpp"

#include <utility>

#include "vessiot/errors.hpp"

namespace vessiot {
namespace {

void check_index(int i) {
    if (i < 1 || i > 2) throw IndexOutOfRange("2D tensor index " + std::to_string(i));
}

std::size_t at(int i) { return static_cast<std::size_t>(i - 1); }

}  // namespace

Metric2D::Metric2D(Expression w11, Expression w22, Expression w12) {
    det_ = w11 * w22 - w12 * w12;
    if (det_.is_zero()) throw DegenerateMetric("metric determinant vanishes identically");
    inv_[0][0] = w22 / det_;
    inv_[1][1] = w11 / det_;
    inv_[0][1] = -w12 / det_;
    inv_[1][0] = inv_[0][1];
    w_[0][0] = std::move(w11);
    w_[1][1] = std::move(w22);
    w_[0][1] = w12;
    w_[1][0] = std::move(w12);
}

Metric2D Metric2D::from_section(const GeometricSection& section) {
    if (section.kind() != ObjectKind::Metric2D)
        throw KindMismatch("expected METRIC_2D, got " + std::string(kind_name(section.kind())));
    const auto& c = section.components();
    return Metric2D(c[0], c[1], c[2]);
}

const Expression& Metric2D::operator()(int i, int j) const {
    check_index(i);
    check_index(j);
    return w_[at(i)][at(j)];
}

const Expression& Metric2D::inverse(int i, int j) const {
    check_index(i);
    check_index(j);
    return inv_[at(i)][at(j)];
}

Connection2D::Connection2D(const std::array<Expression, 6>& components) : g_(components) {}

Connection2D Connection2D::from_section(const GeometricSection& section) {
    if (section.kind() != ObjectKind::Christoffel2D)
        throw KindMismatch("expected CHRISTOFFEL_2D, got " + std::string(kind_name(section.kind())));
    std::array<Expression, 6> g;
    for (std::size_t i = 0; i < 6; ++i) g[i] = section.components()[i];
    return Connection2D(g);
}

std::size_t Connection2D::slot(int k, int i, int j) {
    check_index(k);
    check_index(i);
    check_index(j);
    if (i > j) std::swap(i, j);
    const int s = (i == 1 && j == 1) ? 0 : (i == 1 ? 1 : 2);
    return static_cast<std::size_t>(3 * (k - 1) + s);
}

const Expression& Connection2D::operator()(int k, int i, int j) const { return g_[slot(k, i, j)]; }

void Connection2D::set(int k, int i, int j, const Expression& value) { g_[slot(k, i, j)] = value; }

std::array<Expression, 6> Connection2D::components() const { return g_; }

bool CurvatureData::is_flat() const {
    for (const auto& r : riemann)
        if (!r.is_zero()) return false;
    return true;
}

Connection2D christoffel(const Metric2D& g) {
    Connection2D out;
    for (int k = 1; k <= 2; ++k)
        for (int i = 1; i <= 2; ++i)
            for (int j = i; j <= 2; ++j) {
                Expression sum;
                for (int r = 1; r <= 2; ++r) {
                    const Expression& inv = g.inverse(k, r);
                    if (inv.is_zero()) continue;
                    sum += inv * (diff(g(r, j), i) + diff(g(i, r), j) - diff(g(i, j), r));
                }
                out.set(k, i, j, sum / Expression(2L));
            }
    return out;
}

CurvatureData riemann(const Connection2D& c) {
    CurvatureData out;
    for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j) {
                    if (i == j) continue;
                    Expression v = diff(c(k, l, j), i) - diff(c(k, l, i), j);
                    for (int r = 1; r <= 2; ++r) v += c(r, l, j) * c(k, r, i) - c(r, l, i) * c(k, r, j);
                    out.riemann[static_cast<std::size_t>(8 * (k - 1) + 4 * (l - 1) + 2 * (i - 1) + (j - 1))] = v;
                }
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            Expression ricci;
            Expression phi;
            for (int r = 1; r <= 2; ++r) {
                ricci += out.rho(r, i, r, j);
                phi += out.rho(r, r, i, j);
            }
            out.ricci[at(i)][at(j)] = ricci;
            out.phi[at(i)][at(j)] = phi;
        }
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            out.sym[at(i)][at(j)] = (out.ricci[at(i)][at(j)] + out.ricci[at(j)][at(i)]) / Expression(2L);
    return out;
}

namespace {

StructureReport constants_from(const Metric2D& g, const CurvatureData& data, bool levi_civita) {
    StructureReport report;
    report.kind = ObjectKind::Metric2D;
    report.quantities.push_back({"det", g.det()});

    static constexpr std::array<std::pair<int, int>, 3> kScan{{{1, 1}, {2, 2}, {1, 2}}};
    std::optional<Expression> c1;
    for (const auto& [i, j] : kScan) {
        if (g(i, j).is_zero()) continue;
        c1 = data.sym[at(i)][at(j)] / g(i, j);
        break;
    }
    for (const auto& [i, j] : kScan) {
        if (!(data.sym[at(i)][at(j)] - *c1 * g(i, j)).is_zero())
            throw NotProportional("symmetric Ricci part is not a multiple of the metric; quotient " + c1->to_string());
    }

    bool ok = true;
    if (c1->is_constant()) {
        report.constants.push_back({"c1", *c1});
    } else {
        ok = false;
        report.residual = *c1;
        report.quantities.push_back({"c1", *c1});
    }

    const Expression& phi12 = data.phi[0][1];
    if (levi_civita) {
        // The Levi-Civita connection forces phi = 0, hence c2 = 0.
        report.jacobi_residuals.push_back({"phi12", phi12});
        if (phi12.is_zero()) {
            report.constants.push_back({"c2", Expression{}});
        } else {
            ok = false;
        }
    } else if (phi12.is_zero()) {
        report.constants.push_back({"c2", Expression{}});
    } else {
        const Expression c2sq = phi12 * phi12 / (Expression(4L) * g.det());
        if (c2sq.is_constant()) {
            report.constants.push_back({"c2^2", c2sq});
        } else {
            ok = false;
            if (!report.residual) report.residual = c2sq;
            report.quantities.push_back({"c2^2", c2sq});
        }
    }
    report.integrable = ok;
    return report;
}

}  // namespace

StructureReport metric_constants(const Metric2D& g) { return constants_from(g, riemann(christoffel(g)), true); }

StructureReport connection_constants(const Metric2D& g, const Connection2D& c) {
    return constants_from(g, riemann(c), false);
}

CurvatureData affine_flatness(const Connection2D& c) { return riemann(c); }

}  // namespace vessiot
