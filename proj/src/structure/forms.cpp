#include "vessiot/forms.hpp"

#include <bit>

#include "vessiot/errors.hpp"

namespace vessiot {
namespace {

// Number of transpositions needed to sort dx^I ^ dx^J into increasing order.
int merge_inversions(std::uint32_t left, std::uint32_t right) {
    int count = 0;
    for (std::uint32_t r = right; r != 0; r &= r - 1) {
        const std::uint32_t bit = r & (~r + 1);
        count += std::popcount(left & ~((bit << 1) - 1));
    }
    return count;
}

}  // namespace

DifferentialForm::DifferentialForm(int n, int degree) : n_(n), degree_(degree) {
    if (n < 1 || n > kMaxDimension) throw IndexOutOfRange("form dimension " + std::to_string(n));
    if (degree < 0) throw PreconditionViolation("negative form degree");
}

DifferentialForm DifferentialForm::function(int n, const Expression& f) {
    DifferentialForm out(n, 0);
    out.add_mask(0, f);
    return out;
}

DifferentialForm DifferentialForm::one_form(const std::vector<Expression>& coefficients) {
    DifferentialForm out(static_cast<int>(coefficients.size()), 1);
    for (std::size_t i = 0; i < coefficients.size(); ++i) out.add_mask(1U << i, coefficients[i]);
    return out;
}

void DifferentialForm::add_mask(std::uint32_t mask, const Expression& c) {
    if (c.is_zero()) return;
    auto it = comps_.find(mask);
    if (it == comps_.end()) {
        comps_.emplace(mask, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) comps_.erase(it);
}

Expression DifferentialForm::coefficient(const std::vector<int>& indices) const {
    if (static_cast<int>(indices.size()) != degree_) throw PreconditionViolation("index count does not match form degree");
    std::uint32_t mask = 0;
    int sign = 1;
    for (int i : indices) {
        if (i < 1 || i > n_) throw IndexOutOfRange("form index " + std::to_string(i));
        const std::uint32_t bit = 1U << (i - 1);
        if (mask & bit) return Expression{};
        if (merge_inversions(mask, bit) % 2) sign = -sign;
        mask |= bit;
    }
    auto it = comps_.find(mask);
    if (it == comps_.end()) return Expression{};
    return sign > 0 ? it->second : -it->second;
}

void DifferentialForm::add(const std::vector<int>& indices, const Expression& c) {
    if (static_cast<int>(indices.size()) != degree_) throw PreconditionViolation("index count does not match form degree");
    std::uint32_t mask = 0;
    int sign = 1;
    for (int i : indices) {
        if (i < 1 || i > n_) throw IndexOutOfRange("form index " + std::to_string(i));
        const std::uint32_t bit = 1U << (i - 1);
        if (mask & bit) return;
        if (merge_inversions(mask, bit) % 2) sign = -sign;
        mask |= bit;
    }
    add_mask(mask, sign > 0 ? c : -c);
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
    if (o.n_ != n_ || o.degree_ != degree_) throw PreconditionViolation("adding forms of different type");
    for (const auto& [mask, c] : o.comps_) add_mask(mask, c);
    return *this;
}

DifferentialForm operator*(const DifferentialForm& f, const Expression& c) {
    DifferentialForm out(f.n_, f.degree_);
    for (const auto& [mask, v] : f.comps_) out.add_mask(mask, v * c);
    return out;
}

std::string DifferentialForm::to_string() const {
    if (comps_.empty()) return "0";
    std::string out;
    for (const auto& [mask, c] : comps_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        bool first = true;
        for (int i = 1; i <= n_; ++i)
            if (mask & (1U << (i - 1))) {
                out += first ? "*" : "^";
                out += "dx" + std::to_string(i);
                first = false;
            }
    }
    return out;
}

DifferentialForm exterior_derivative(const DifferentialForm& form) {
    if (form.degree() >= form.n())
        throw DegreeOverflow("exterior derivative of a " + std::to_string(form.degree()) + "-form in dimension " +
                             std::to_string(form.n()));
    DifferentialForm out(form.n(), form.degree() + 1);
    for (const auto& [mask, c] : form.components())
        for (int i = 1; i <= form.n(); ++i) {
            const std::uint32_t bit = 1U << (i - 1);
            if (mask & bit) continue;
            Expression d = diff(c, i);
            if (d.is_zero()) continue;
            // dx^i ^ dx^I: dx^i moves past the indices of I below i.
            const int swaps = std::popcount(mask & (bit - 1));
            out.add_mask(mask | bit, swaps % 2 ? -d : d);
        }
    return out;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    if (a.n() != b.n()) throw PreconditionViolation("wedge of forms in different dimensions");
    DifferentialForm out(a.n(), a.degree() + b.degree());
    if (out.degree() > out.n()) return out;
    for (const auto& [ma, ca] : a.components())
        for (const auto& [mb, cb] : b.components()) {
            if (ma & mb) continue;
            const Expression prod = ca * cb;
            out.add_mask(ma | mb, merge_inversions(ma, mb) % 2 ? -prod : prod);
        }
    return out;
}

}  // namespace vessiot
