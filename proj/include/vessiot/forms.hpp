#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vessiot/expression.hpp"

namespace vessiot {

/// Differential k-form on an n-dimensional chart with expression
/// coefficients. Components are keyed by the bitmask of the increasing index
/// set I of dx^I; zero coefficients are never stored.
class DifferentialForm {
public:
    DifferentialForm(int n, int degree);

    static DifferentialForm function(int n, const Expression& f);
    /// sum_i c[i] dx^{i+1}.
    static DifferentialForm one_form(const std::vector<Expression>& coefficients);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] bool is_zero() const noexcept { return comps_.empty(); }
    [[nodiscard]] const std::map<std::uint32_t, Expression>& components() const noexcept { return comps_; }

    /// Coefficient of dx^{i1} ^ ... ^ dx^{ik} for any index order (the sign of
    /// the sorting permutation is applied; repeated indices give 0).
    [[nodiscard]] Expression coefficient(const std::vector<int>& indices) const;
    /// Adds c dx^{i1} ^ ... ^ dx^{ik}.
    void add(const std::vector<int>& indices, const Expression& c);

    DifferentialForm& operator+=(const DifferentialForm& o);
    friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
    friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a += b * Expression(-1L); }
    friend DifferentialForm operator*(const DifferentialForm& f, const Expression& c);
    friend bool operator==(const DifferentialForm&, const DifferentialForm&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    friend DifferentialForm exterior_derivative(const DifferentialForm& form);
    friend DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

    void add_mask(std::uint32_t mask, const Expression& c);

    int n_;
    int degree_;
    std::map<std::uint32_t, Expression> comps_;
};

/// d: k-forms to (k+1)-forms. Throws DegreeOverflow when k >= n.
[[nodiscard]] DifferentialForm exterior_derivative(const DifferentialForm& form);

/// Exterior product; beyond the top degree the result is the zero form.
[[nodiscard]] DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

}  // namespace vessiot
