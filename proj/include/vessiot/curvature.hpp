#pragma once

#include <array>
#include <optional>

#include "vessiot/expression.hpp"
#include "vessiot/section.hpp"
#include "vessiot/structure_report.hpp"

namespace vessiot {

/// Symmetric 2D metric; indices are 1-based.
class Metric2D {
public:
    /// Throws DegenerateMetric when the determinant vanishes identically.
    Metric2D(Expression w11, Expression w22, Expression w12);
    static Metric2D from_section(const GeometricSection& section);

    [[nodiscard]] const Expression& operator()(int i, int j) const;
    [[nodiscard]] const Expression& det() const noexcept { return det_; }
    [[nodiscard]] const Expression& inverse(int i, int j) const;

private:
    std::array<std::array<Expression, 2>, 2> w_;
    std::array<std::array<Expression, 2>, 2> inv_;
    Expression det_;
};

/// Symmetric connection gamma^k_ij on n = 2.
class Connection2D {
public:
    Connection2D() = default;
    /// Components in the order (g111, g112, g122, g211, g212, g222).
    explicit Connection2D(const std::array<Expression, 6>& components);
    static Connection2D from_section(const GeometricSection& section);

    [[nodiscard]] const Expression& operator()(int k, int i, int j) const;
    void set(int k, int i, int j, const Expression& value);
    [[nodiscard]] std::array<Expression, 6> components() const;

private:
    static std::size_t slot(int k, int i, int j);
    std::array<Expression, 6> g_{};
};

struct CurvatureData {
    /// rho^k_{l,ij}, 1-based through `rho`.
    std::array<Expression, 16> riemann{};
    std::array<std::array<Expression, 2>, 2> ricci{};
    std::array<std::array<Expression, 2>, 2> phi{};
    std::array<std::array<Expression, 2>, 2> sym{};

    [[nodiscard]] const Expression& rho(int k, int l, int i, int j) const {
        return riemann[static_cast<std::size_t>(8 * (k - 1) + 4 * (l - 1) + 2 * (i - 1) + (j - 1))];
    }
    [[nodiscard]] bool is_flat() const;
};

/// Levi-Civita connection.
[[nodiscard]] Connection2D christoffel(const Metric2D& g);

/// rho^k_{l,ij} = d_i g^k_lj - d_j g^k_li + g^r_lj g^k_ri - g^r_li g^k_rj,
/// Ricci rho_ij = rho^r_{i,rj}.
[[nodiscard]] CurvatureData riemann(const Connection2D& c);

/// c1 from sym = c1 omega and c2 from phi_12 through the Levi-Civita
/// connection. Throws DegenerateMetric, NotProportional.
[[nodiscard]] StructureReport metric_constants(const Metric2D& g);

/// Same with an independent connection; c2 is reported squared as
/// c2^2 = phi_12^2 / (4 det omega).
[[nodiscard]] StructureReport connection_constants(const Metric2D& g, const Connection2D& c);

/// Riemann tensor of a standalone connection; flat iff affine.
[[nodiscard]] CurvatureData affine_flatness(const Connection2D& c);

}  // namespace vessiot
