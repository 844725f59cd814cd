#include "vessiot/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vessiot/errors.hpp"

namespace vessiot {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::power(Symbol s, unsigned exponent) {
    Monomial m;
    if (exponent > 0) {
        m.factors_.emplace_back(s, exponent);
        m.degree_ = exponent;
    }
    return m;
}

unsigned Monomial::exponent(Symbol s) const noexcept {
    for (const auto& [sym, e] : factors_)
        if (sym == s) return e;
    return 0;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
    Monomial out;
    auto it = factors_.begin();
    for (const auto& [sym, e] : divisor.factors_) {
        while (it != factors_.end() && it->first < sym) out.factors_.push_back(*it++);
        if (it == factors_.end() || it->first != sym || it->second < e) return std::nullopt;
        if (it->second > e) out.factors_.emplace_back(sym, it->second - e);
        ++it;
    }
    out.factors_.insert(out.factors_.end(), it, factors_.end());
    out.degree_ = degree_ - divisor.degree_;
    return out;
}

Monomial Monomial::without(Symbol s) const {
    Monomial out;
    for (const auto& f : factors_)
        if (f.first != s) {
            out.factors_.push_back(f);
            out.degree_ += f.second;
        }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first == j->first) {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        } else if (i->first < j->first) {
            out.factors_.push_back(*i++);
        } else {
            out.factors_.push_back(*j++);
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
        if (i->first != j->first)
            // The side carrying the earlier symbol has a positive exponent
            // where the other has zero.
            return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
        if (i->second != j->second) return i->second <=> j->second;
    }
    if (i != a.factors_.end()) return std::strong_ordering::greater;
    if (j != b.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
    std::string out;
    for (const auto& [sym, e] : factors_) {
        if (!out.empty()) out += '*';
        out += sym.name();
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
    if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

Polynomial::Polynomial(Symbol s) { terms_.push_back({Monomial::power(s), Rational(1)}); }

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
    if (sgn(c) != 0) terms_.push_back({m, c});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    Polynomial out;
    out.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
            out.terms_.back().coeff += t.coeff;
        } else {
            if (!out.terms_.empty() && sgn(out.terms_.back().coeff) == 0) out.terms_.pop_back();
            out.terms_.push_back(std::move(t));
        }
    }
    if (!out.terms_.empty() && sgn(out.terms_.back().coeff) == 0) out.terms_.pop_back();
    return out;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw PreconditionViolation("polynomial is not constant");
    return terms_.front().coeff;
}

unsigned Polynomial::total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

unsigned Polynomial::degree_in(Symbol s) const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(s));
    return d;
}

bool Polynomial::contains(Symbol s) const noexcept {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial.exponent(s) > 0; });
}

std::set<Symbol> Polynomial::symbols() const {
    std::set<Symbol> out;
    for (const auto& t : terms_)
        for (const auto& f : t.monomial.factors()) out.insert(f.first);
    return out;
}

std::map<unsigned, Polynomial, std::greater<>> Polynomial::coefficients_in(Symbol s) const {
    std::map<unsigned, std::vector<Term>, std::greater<>> buckets;
    for (const auto& t : terms_) buckets[t.monomial.exponent(s)].push_back({t.monomial.without(s), t.coeff});
    std::map<unsigned, Polynomial, std::greater<>> out;
    for (auto& [e, ts] : buckets) out.emplace(e, from_terms(std::move(ts)));
    return out;
}

Polynomial Polynomial::leading_coefficient_in(Symbol s) const {
    const unsigned d = degree_in(s);
    std::vector<Term> ts;
    for (const auto& t : terms_)
        if (t.monomial.exponent(s) == d) ts.push_back({t.monomial.without(s), t.coeff});
    return from_terms(std::move(ts));
}

Polynomial Polynomial::derivative(Symbol s) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        const unsigned e = t.monomial.exponent(s);
        if (e == 0) continue;
        Monomial m = t.monomial.without(s) * Monomial::power(s, e - 1);
        ts.push_back({std::move(m), t.coeff * e});
    }
    return from_terms(std::move(ts));
}

Polynomial Polynomial::evaluate(const std::map<Symbol, Rational>& values) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial kept;
        Rational c = t.coeff;
        for (const auto& [sym, e] : t.monomial.factors()) {
            auto it = values.find(sym);
            if (it == values.end()) {
                kept = kept * Monomial::power(sym, e);
            } else {
                Rational p(1);
                for (unsigned k = 0; k < e; ++k) p *= it->second;
                c *= p;
            }
        }
        ts.push_back({std::move(kept), c});
    }
    return from_terms(std::move(ts));
}

double Polynomial::evaluate_numeric(const std::map<Symbol, double>& values) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        double v = t.coeff.get_d();
        for (const auto& [sym, e] : t.monomial.factors()) {
            auto it = values.find(sym);
            if (it == values.end()) throw PreconditionViolation("no numeric value for symbol " + sym.name());
            v *= std::pow(it->second, static_cast<double>(e));
        }
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1L);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

void Polynomial::add_scaled(const Polynomial& o, const Rational& scale, const Monomial& shift) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    const bool shifted = !shift.is_one();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end()) {
            merged.push_back(std::move(*i++));
            continue;
        }
        Monomial mj = shifted ? j->monomial * shift : j->monomial;
        if (i == terms_.end() || i->monomial < mj) {
            merged.push_back({std::move(mj), j->coeff * scale});
            ++j;
        } else if (mj < i->monomial) {
            merged.push_back(std::move(*i++));
        } else {
            Rational c = i->coeff + j->coeff * scale;
            if (sgn(c) != 0) merged.push_back({std::move(i->monomial), std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    add_scaled(o, Rational(1), Monomial{});
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    add_scaled(o, Rational(-1), Monomial{});
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
    if (sgn(c) == 0) throw DivisionByZero("polynomial divided by zero");
    for (auto& t : terms_) t.coeff /= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b * a.terms_.front().coeff;
    if (b.is_constant()) return a * b.terms_.front().coeff;
    std::vector<Term> ts;
    ts.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) ts.push_back({x.monomial * y.monomial, x.coeff * y.coeff});
    return Polynomial::from_terms(std::move(ts));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
        if (a.terms_[k].monomial != b.terms_[k].monomial || a.terms_[k].coeff != b.terms_[k].coeff)
            return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        c = abs(c);
        if (t.monomial.is_one()) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << '*';
            os << t.monomial.to_string();
        }
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------- division and gcd

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return Polynomial{};
    if (b.is_constant()) {
        Polynomial q = a;
        q /= b.constant_value();
        return q;
    }
    Polynomial remainder = a;
    std::vector<Term> quotient;
    const Term& lead = b.leading_term();
    while (!remainder.is_zero()) {
        const Term& r = remainder.leading_term();
        auto m = r.monomial.divide(lead.monomial);
        if (!m) return std::nullopt;
        Rational c = r.coeff / lead.coeff;
        remainder -= b * Polynomial(*m, c);
        quotient.push_back({std::move(*m), std::move(c)});
    }
    return Polynomial::from_terms(std::move(quotient));
}

Rational content(const Polynomial& p) {
    if (p.is_zero()) return Rational(1);
    mpz_class num_gcd(0);
    mpz_class den_lcm(1);
    for (const auto& t : p.terms()) {
        num_gcd = ::gcd(num_gcd, t.coeff.get_num());
        den_lcm = ::lcm(den_lcm, t.coeff.get_den());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    if (sgn(p.leading_term().coeff) < 0) c = -c;
    return c;
}

Polynomial primitive_part(const Polynomial& p) {
    Polynomial out = p;
    out /= content(p);
    return out;
}

namespace {

Polynomial monomial_gcd(const Monomial& m, const Polynomial& p) {
    Monomial g;
    for (const auto& [sym, e] : m.factors()) {
        unsigned low = e;
        for (const auto& t : p.terms()) {
            low = std::min(low, t.monomial.exponent(sym));
            if (low == 0) break;
        }
        if (low > 0) g = g * Monomial::power(sym, low);
    }
    return Polynomial(g, Rational(1));
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto q = divide_exact(a, b);
    if (!q) throw PreconditionViolation("internal: expected exact polynomial division");
    return std::move(*q);
}

Polynomial content_in(const Polynomial& p, Symbol v) {
    Polynomial g;
    for (const auto& [e, c] : p.coefficients_in(v)) {
        g = gcd(g, c);
        if (g.is_constant()) return Polynomial(1L);
    }
    return g;
}

Polynomial primitive_in(const Polynomial& p, Symbol v) {
    Polynomial c = content_in(p, v);
    return primitive_part(exact_quotient(p, c));
}

// Pseudo-remainder of a by b viewed as polynomials in v. Extra powers of
// lc_v(b) relative to the textbook prem only change the content in v.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, Symbol v) {
    const unsigned db = b.degree_in(v);
    const Polynomial lcb = b.leading_coefficient_in(v);
    while (!a.is_zero()) {
        const unsigned da = a.degree_in(v);
        if (da < db) break;
        Polynomial lca = a.leading_coefficient_in(v);
        a = a * lcb - lca * Polynomial(Monomial::power(v, da - db), Rational(1)) * b;
    }
    return a;
}

mpz_class max_norm(const Polynomial& p) {
    mpz_class m(0);
    for (const auto& t : p.terms())
        if (abs(t.coeff.get_num()) > m) m = abs(t.coeff.get_num());
    return m;
}

// Coefficient-wise symmetric residue in (-x/2, x/2].
Polynomial symmetric_mod(const Polynomial& p, const mpz_class& x) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_num().get_mpz_t(), x.get_mpz_t());
        if (2 * r > x) r -= x;
        if (r != 0) ts.push_back({t.monomial, Rational(r)});
    }
    return Polynomial::from_terms(std::move(ts));
}

// Rebuilds a polynomial in v from its value h at v = x (x-adic digits).
Polynomial interpolate(Polynomial h, const mpz_class& x, Symbol v) {
    std::vector<Term> out;
    for (unsigned k = 0; !h.is_zero(); ++k) {
        const Polynomial g = symmetric_mod(h, x);
        for (const auto& t : g.terms()) out.push_back({t.monomial * Monomial::power(v, k), t.coeff});
        h -= g;
        h /= Rational(x);
    }
    return Polynomial::from_terms(std::move(out));
}

bool divides(const Polynomial& d, const Polynomial& p) { return divide_exact(p, d).has_value(); }

// Heuristic gcd of integer polynomials over vars[level..]: evaluate the
// leading variable at an integer, recurse, interpolate, and keep the
// candidate only if it divides both inputs.
std::optional<Polynomial> heuristic_gcd(const Polynomial& a, const Polynomial& b, const std::vector<Symbol>& vars,
                                        std::size_t level) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (level == vars.size()) {
        const mpz_class g = ::gcd(a.constant_value().get_num(), b.constant_value().get_num());
        return Polynomial(Rational(g));
    }
    const Rational ca = abs(content(a));
    const Rational cb = abs(content(b));
    const mpz_class common = ::gcd(ca.get_num(), cb.get_num());
    Polynomial pa = a;
    pa /= ca;
    Polynomial pb = b;
    pb /= cb;
    if (pa.is_constant() || pb.is_constant()) return Polynomial(Rational(common));

    const Symbol v = vars[level];
    const mpz_class na = max_norm(pa);
    const mpz_class nb = max_norm(pb);
    const mpz_class bound = 2 * std::min(na, nb) + 29;
    mpz_class x = std::min(bound, mpz_class(99 * sqrt(bound)));
    const mpz_class lead_bound = 2 * std::min(na / abs(pa.leading_term().coeff.get_num()),
                                              nb / abs(pb.leading_term().coeff.get_num())) + 2;
    x = std::max(x, lead_bound);

    for (int attempt = 0; attempt < 6; ++attempt) {
        const Polynomial ea = pa.evaluate({{v, Rational(x)}});
        const Polynomial eb = pb.evaluate({{v, Rational(x)}});
        if (!ea.is_zero() && !eb.is_zero()) {
            if (auto h = heuristic_gcd(ea, eb, vars, level + 1)) {
                Polynomial candidate = primitive_part(interpolate(*h, x, v));
                if (!candidate.is_zero() && divides(candidate, pa) && divides(candidate, pb)) {
                    candidate *= Rational(common);
                    return candidate;
                }
            }
        }
        x = 73794 * x * mpz_class(sqrt(mpz_class(sqrt(x)))) / 27011;
    }
    return std::nullopt;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? Polynomial{} : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(1L);
    if (a.terms().size() == 1) return monomial_gcd(a.leading_term().monomial, b);
    if (b.terms().size() == 1) return monomial_gcd(b.leading_term().monomial, a);

    const auto sa = a.symbols();
    const auto sb = b.symbols();
    // A symbol missing from one side cannot occur in the gcd.
    for (const auto& s : sa)
        if (!sb.count(s)) return gcd(content_in(a, s), b);
    for (const auto& s : sb)
        if (!sa.count(s)) return gcd(a, content_in(b, s));

    if (primitive_part(a) == primitive_part(b)) return primitive_part(a);

    {
        const std::vector<Symbol> vars(sa.begin(), sa.end());
        if (auto h = heuristic_gcd(primitive_part(a), primitive_part(b), vars, 0)) return primitive_part(*h);
    }

    Symbol v = *sa.begin();
    unsigned best = std::max(a.degree_in(v), b.degree_in(v));
    for (const auto& s : sa) {
        const unsigned d = std::max(a.degree_in(s), b.degree_in(s));
        if (d < best) {
            best = d;
            v = s;
        }
    }

    const Polynomial ca = content_in(a, v);
    const Polynomial cb = content_in(b, v);
    const Polynomial gc = gcd(ca, cb);
    Polynomial x = primitive_part(exact_quotient(a, ca));
    Polynomial y = primitive_part(exact_quotient(b, cb));
    if (x.degree_in(v) < y.degree_in(v)) std::swap(x, y);
    for (;;) {
        Polynomial r = pseudo_remainder(x, y, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            y = Polynomial(1L);
            break;
        }
        x = std::move(y);
        y = primitive_in(r, v);
    }
    return primitive_part(gc * y);
}

std::optional<Polynomial> sqrt_exact(const Polynomial& p) {
    if (p.is_zero()) return Polynomial{};
    auto rational_sqrt = [](const Rational& q) -> std::optional<Rational> {
        if (sgn(q) < 0) return std::nullopt;
        const mpz_class& n = q.get_num();
        const mpz_class& d = q.get_den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        Rational r(rn, rd);
        r.canonicalize();
        return r;
    };
    const Term& lead = p.leading_term();
    Monomial root_monomial;
    for (const auto& [sym, e] : lead.monomial.factors()) {
        if (e % 2 != 0) return std::nullopt;
        root_monomial = root_monomial * Monomial::power(sym, e / 2);
    }
    auto root_coeff = rational_sqrt(lead.coeff);
    if (!root_coeff) return std::nullopt;

    const Term first{root_monomial, *root_coeff};
    Polynomial root(first.monomial, first.coeff);
    Polynomial remainder = p - root * root;
    while (!remainder.is_zero()) {
        const Term& r = remainder.leading_term();
        auto m = r.monomial.divide(first.monomial);
        if (!m || !(*m < root.terms().back().monomial)) return std::nullopt;
        Polynomial t(*m, r.coeff / (2 * first.coeff));
        remainder -= t * (root * Rational(2) + t);
        root += t;
    }
    return root;
}

}  // namespace vessiot
