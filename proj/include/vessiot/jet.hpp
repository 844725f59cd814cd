#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vessiot/expression.hpp"

namespace vessiot {

/// Symmetrized derivative multi-index mu = (mu_1..mu_n); order |mu| = sum.
class MultiIndex {
public:
    explicit MultiIndex(int n);
    static MultiIndex from_exponents(std::vector<int> exponents);
    /// From a list of 1-based derivative directions, e.g. {1, 2, 2}.
    static MultiIndex from_directions(int n, const std::vector<int>& directions);

    [[nodiscard]] int n() const noexcept { return static_cast<int>(exps_.size()); }
    [[nodiscard]] int order() const noexcept { return order_; }
    /// Exponent of direction i (1-based).
    [[nodiscard]] int operator[](int i) const { return exps_.at(static_cast<std::size_t>(i - 1)); }
    [[nodiscard]] const std::vector<int>& exponents() const noexcept { return exps_; }
    /// mu + 1_i.
    [[nodiscard]] MultiIndex incremented(int i) const;
    [[nodiscard]] MultiIndex operator+(const MultiIndex& o) const;
    /// Directions in nondecreasing order, e.g. "122"; empty for order 0.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    /// Graded, then lexicographic with direction 1 most significant.
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

private:
    std::vector<int> exps_;
    int order_ = 0;
};

/// All multi-indices of exactly the given order in n variables, descending.
[[nodiscard]] std::vector<MultiIndex> multi_indices_of_order(int n, int order);

/// The jet coordinate xi^k_mu.
struct JetVariable {
    int component;  // 1-based k
    MultiIndex index;

    [[nodiscard]] int order() const noexcept { return index.order(); }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const JetVariable&, const JetVariable&) = default;
};

/// xi^k_mu built from derivative directions: xi(2, 1, {2}) is xi^1_2.
[[nodiscard]] JetVariable xi(int n, int component, const std::vector<int>& directions = {});

/// Leading-first order: higher jet order first, then component, then index.
struct JetOrder {
    bool operator()(const JetVariable& a, const JetVariable& b) const;
};

/// sum coeff * xi^k_mu = 0 with no stored zero coefficients.
class LinearJetEquation {
public:
    using TermMap = std::map<JetVariable, Expression, JetOrder>;

    explicit LinearJetEquation(int n) : n_(n) {}

    void add(const JetVariable& v, const Expression& c);
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    /// Maximum |mu| over nonzero terms; 0 for the zero equation.
    [[nodiscard]] int order() const noexcept;
    [[nodiscard]] Expression coefficient(const JetVariable& v) const;
    /// The equation divided by its leading coefficient.
    [[nodiscard]] LinearJetEquation normalized() const;
    [[nodiscard]] LinearJetEquation scaled(const Expression& factor) const;

    LinearJetEquation& operator+=(const LinearJetEquation& o);
    friend LinearJetEquation operator+(LinearJetEquation a, const LinearJetEquation& b) { return a += b; }
    friend bool operator==(const LinearJetEquation& a, const LinearJetEquation& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    [[nodiscard]] std::string to_string() const;

private:
    int n_;
    TermMap terms_;
};

/// d_i: each a * xi^k_mu contributes (d_i a) xi^k_mu + a xi^k_{mu+1_i}.
[[nodiscard]] LinearJetEquation formal_derivative(const LinearJetEquation& eq, int i);
/// d_mu, applying each direction of mu in turn.
[[nodiscard]] LinearJetEquation formal_derivative(const LinearJetEquation& eq, const MultiIndex& mu);

/// The system together with d_mu of every equation for 1 <= |mu| <= r,
/// normalized to leading coefficient 1 and deduplicated; zero equations are
/// dropped.
[[nodiscard]] std::vector<LinearJetEquation> prolong(const std::vector<LinearJetEquation>& system, int r);

/// dim g_q: n * C(q+n-1, n-1) minus the rank of the coefficients of the
/// order-q jet variables. Evaluated at `point` (default x^i = i+1) unless
/// `function_field` is set, in which case the rank is taken over the field
/// of rational functions. Throws SingularPoint, PreconditionViolation.
[[nodiscard]] int symbol_dimension(const std::vector<LinearJetEquation>& system, int q,
                                   const std::optional<std::map<Symbol, Rational>>& point = std::nullopt,
                                   bool function_field = false);

}  // namespace vessiot
