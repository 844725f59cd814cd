#include "vessiot/linear_algebra.hpp"

#include <limits>

#include "vessiot/errors.hpp"

namespace vessiot {
namespace {

std::size_t weight(const Expression& e) {
    return e.numerator().terms().size() + e.denominator().terms().size();
}

// Picks the lightest nonzero entry of `col` at or below `from`.
std::optional<std::size_t> choose_pivot(const ExprMatrix& m, std::size_t col, std::size_t from) {
    std::optional<std::size_t> best;
    std::size_t best_weight = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = from; r < m.size(); ++r) {
        if (m[r][col].is_zero()) continue;
        const std::size_t w = weight(m[r][col]);
        if (w < best_weight) {
            best = r;
            best_weight = w;
        }
    }
    return best;
}

}  // namespace

ExprMatrix row_reduce(ExprMatrix rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
        auto p = choose_pivot(rows, c, lead);
        if (!p) continue;
        std::swap(rows[lead], rows[*p]);
        const Expression inv = Expression(1L) / rows[lead][c];
        for (auto& e : rows[lead]) e *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][c].is_zero()) continue;
            const Expression f = rows[r][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!rows[lead][k].is_zero()) rows[r][k] -= f * rows[lead][k];
        }
        ++lead;
    }
    rows.resize(lead);
    return rows;
}

std::size_t rank(ExprMatrix rows) { return row_reduce(std::move(rows)).size(); }

std::optional<std::vector<Expression>> solve(const ExprMatrix& a, const std::vector<Expression>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw PreconditionViolation("solve: dimension mismatch");
    ExprMatrix aug = a;
    for (std::size_t r = 0; r < n; ++r) {
        if (aug[r].size() != n) throw PreconditionViolation("solve: matrix is not square");
        aug[r].push_back(b[r]);
    }
    ExprMatrix red = row_reduce(std::move(aug));
    if (red.size() < n) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r)
        if (red[r][r] != Expression(1L)) return std::nullopt;
    std::vector<Expression> x;
    x.reserve(n);
    for (auto& row : red) x.push_back(std::move(row[n]));
    return x;
}

Expression determinant(ExprMatrix a) {
    const std::size_t n = a.size();
    Expression det(1L);
    for (std::size_t c = 0; c < n; ++c) {
        auto p = choose_pivot(a, c, c);
        if (!p) return Expression{};
        if (*p != c) {
            std::swap(a[c], a[*p]);
            det = -det;
        }
        det *= a[c][c];
        const Expression inv = Expression(1L) / a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            const Expression f = a[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

}  // namespace vessiot
