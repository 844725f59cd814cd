#include "vessiot/jet.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vessiot/errors.hpp"
#include "vessiot/linear_algebra.hpp"

namespace vessiot {

// -------------------------------------------------------------- MultiIndex

MultiIndex::MultiIndex(int n) {
    if (n < 1 || n > kMaxDimension) throw IndexOutOfRange("multi-index dimension " + std::to_string(n));
    exps_.assign(static_cast<std::size_t>(n), 0);
}

MultiIndex MultiIndex::from_exponents(std::vector<int> exponents) {
    MultiIndex mu(static_cast<int>(exponents.size()));
    for (int e : exponents)
        if (e < 0) throw PreconditionViolation("negative multi-index exponent");
    mu.order_ = std::accumulate(exponents.begin(), exponents.end(), 0);
    mu.exps_ = std::move(exponents);
    return mu;
}

MultiIndex MultiIndex::from_directions(int n, const std::vector<int>& directions) {
    MultiIndex mu(n);
    for (int d : directions) mu = mu.incremented(d);
    return mu;
}

MultiIndex MultiIndex::incremented(int i) const {
    if (i < 1 || i > n()) throw IndexOutOfRange("direction " + std::to_string(i) + " outside 1.." + std::to_string(n()));
    MultiIndex out = *this;
    ++out.exps_[static_cast<std::size_t>(i - 1)];
    ++out.order_;
    return out;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (o.n() != n()) throw PreconditionViolation("multi-index dimension mismatch");
    MultiIndex out = *this;
    for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[k] += o.exps_[k];
    out.order_ += o.order_;
    return out;
}

std::string MultiIndex::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < exps_.size(); ++k) out.append(static_cast<std::size_t>(exps_[k]), static_cast<char>('1' + k));
    return out;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (a.order_ != b.order_) return a.order_ <=> b.order_;
    return a.exps_ <=> b.exps_;
}

std::vector<MultiIndex> multi_indices_of_order(int n, int order) {
    std::vector<MultiIndex> out;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    // Enumerate compositions of `order` into n parts.
    auto rec = [&](auto&& self, int slot, int left) -> void {
        if (slot == n - 1) {
            exps[static_cast<std::size_t>(slot)] = left;
            out.push_back(MultiIndex::from_exponents(exps));
            return;
        }
        for (int e = left; e >= 0; --e) {
            exps[static_cast<std::size_t>(slot)] = e;
            self(self, slot + 1, left - e);
        }
    };
    rec(rec, 0, order);
    return out;
}

// ------------------------------------------------------------- JetVariable

std::string JetVariable::to_string() const {
    std::string out = "xi^" + std::to_string(component);
    if (index.order() > 0) out += "_" + index.to_string();
    return out;
}

JetVariable xi(int n, int component, const std::vector<int>& directions) {
    if (component < 1 || component > n) throw IndexOutOfRange("jet component " + std::to_string(component));
    return {component, MultiIndex::from_directions(n, directions)};
}

bool JetOrder::operator()(const JetVariable& a, const JetVariable& b) const {
    if (a.order() != b.order()) return a.order() > b.order();
    if (a.component != b.component) return a.component < b.component;
    return a.index > b.index;
}

// ------------------------------------------------------- LinearJetEquation

void LinearJetEquation::add(const JetVariable& v, const Expression& c) {
    if (v.index.n() != n_) throw PreconditionViolation("jet variable dimension mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(v);
    if (it == terms_.end()) {
        terms_.emplace(v, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int LinearJetEquation::order() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first.order(); }

Expression LinearJetEquation::coefficient(const JetVariable& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? Expression{} : it->second;
}

LinearJetEquation LinearJetEquation::normalized() const {
    if (terms_.empty()) return *this;
    return scaled(Expression(1L) / terms_.begin()->second);
}

LinearJetEquation LinearJetEquation::scaled(const Expression& factor) const {
    LinearJetEquation out(n_);
    if (factor.is_zero()) return out;
    for (const auto& [v, c] : terms_) out.terms_.emplace(v, c * factor);
    return out;
}

LinearJetEquation& LinearJetEquation::operator+=(const LinearJetEquation& o) {
    if (o.n_ != n_) throw PreconditionViolation("equation dimension mismatch");
    for (const auto& [v, c] : o.terms_) add(v, c);
    return *this;
}

std::string LinearJetEquation::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : terms_) {
        const auto r = c.rational_value();
        const bool negative = r && sgn(*r) < 0;
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        first = false;
        if (r) {
            const Rational m = abs(*r);
            if (m != 1) os << m.get_str() << "*";
        } else {
            os << "(" << c.to_string() << ")*";
        }
        os << v.to_string();
    }
    return os.str();
}

LinearJetEquation formal_derivative(const LinearJetEquation& eq, int i) {
    if (i < 1 || i > eq.n()) throw IndexOutOfRange("formal derivative direction " + std::to_string(i));
    LinearJetEquation out(eq.n());
    for (const auto& [v, c] : eq.terms()) {
        out.add(v, diff(c, i));
        out.add({v.component, v.index.incremented(i)}, c);
    }
    return out;
}

LinearJetEquation formal_derivative(const LinearJetEquation& eq, const MultiIndex& mu) {
    LinearJetEquation out = eq;
    for (int i = 1; i <= mu.n(); ++i)
        for (int k = 0; k < mu[i]; ++k) out = formal_derivative(out, i);
    return out;
}

std::vector<LinearJetEquation> prolong(const std::vector<LinearJetEquation>& system, int r) {
    if (r < 0) throw PreconditionViolation("prolongation order must be non-negative");
    std::vector<LinearJetEquation> out;
    auto push_unique = [&out](const LinearJetEquation& eq) {
        if (eq.is_zero()) return;
        LinearJetEquation normal = eq.normalized();
        if (std::find(out.begin(), out.end(), normal) == out.end()) out.push_back(std::move(normal));
    };
    for (const auto& eq : system) {
        // Frontier of (equation, last direction) so each d_mu is built once.
        std::vector<std::pair<LinearJetEquation, int>> frontier{{eq, 1}};
        push_unique(eq);
        for (int level = 1; level <= r; ++level) {
            std::vector<std::pair<LinearJetEquation, int>> next;
            for (const auto& [e, last] : frontier)
                for (int i = last; i <= eq.n(); ++i) {
                    LinearJetEquation d = formal_derivative(e, i);
                    push_unique(d);
                    next.emplace_back(std::move(d), i);
                }
            frontier = std::move(next);
        }
    }
    return out;
}

int symbol_dimension(const std::vector<LinearJetEquation>& system, int q,
                     const std::optional<std::map<Symbol, Rational>>& point, bool function_field) {
    if (system.empty()) throw PreconditionViolation("symbol of an empty system needs an explicit dimension");
    if (q < 0) throw PreconditionViolation("negative symbol order");
    const int n = system.front().n();
    const auto at = point.value_or(default_sample_point(n));

    std::vector<JetVariable> vars;
    for (int k = 1; k <= n; ++k)
        for (const auto& mu : multi_indices_of_order(n, q)) vars.push_back({k, mu});

    ExprMatrix rows;
    for (const auto& eq : system) {
        if (eq.n() != n) throw PreconditionViolation("mixed dimensions in system");
        if (eq.order() > q)
            throw PreconditionViolation("equation of order " + std::to_string(eq.order()) + " exceeds symbol order " +
                                        std::to_string(q));
        std::vector<Expression> row;
        row.reserve(vars.size());
        bool any = false;
        for (const auto& v : vars) {
            Expression c = eq.coefficient(v);
            if (!function_field && !c.is_zero()) c = c.evaluate(at);
            any = any || !c.is_zero();
            row.push_back(std::move(c));
        }
        if (any) rows.push_back(std::move(row));
    }
    return static_cast<int>(vars.size()) - static_cast<int>(rank(std::move(rows)));
}

}  // namespace vessiot
