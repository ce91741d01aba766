#include "benney/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace benney {

Monomial::Monomial(Variable v, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    if (exponent > 0) factors_.emplace_back(v, exponent);
}

int Monomial::exponent(Variable v) const {
    for (const auto& [var, e] : factors_)
        if (var == v) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [var, e] : factors_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    auto a = factors_.begin(), ae = factors_.end();
    auto b = other.factors_.begin(), be = other.factors_.end();
    while (a != ae && b != be) {
        if (a->first < b->first) {
            out.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, ae);
    out.factors_.insert(out.factors_.end(), b, be);
    return out;
}

Monomial Monomial::divided_by(Variable v) const {
    Monomial out;
    bool seen = false;
    for (const auto& [var, e] : factors_) {
        if (var == v) {
            seen = true;
            if (e > 1) out.factors_.emplace_back(var, e - 1);
        } else {
            out.factors_.emplace_back(var, e);
        }
    }
    if (!seen) throw std::invalid_argument("divided_by: variable absent");
    return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Same degree: scan variables from the highest down; the monomial with
    // the larger exponent at the first difference comes first.
    auto ra = a.factors().rbegin(), rae = a.factors().rend();
    auto rb = b.factors().rbegin(), rbe = b.factors().rend();
    while (ra != rae && rb != rbe) {
        if (rb->first < ra->first) return true;   // a holds the higher var
        if (ra->first < rb->first) return false;
        if (ra->second != rb->second) return ra->second > rb->second;
        ++ra, ++rb;
    }
    return ra != rae;  // longer tail of low variables loses ties
    // (equal monomials return false on both orderings, as required)
}

Polynomial::Polynomial(long constant) {
    if (constant != 0) terms_.emplace(Monomial{}, Rational(constant));
}

Polynomial::Polynomial(const Rational& constant) {
    if (!is_zero(constant)) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(Variable v) {
    return term(Rational(1), Monomial(v));
}

Polynomial Polynomial::term(const Rational& coeff, const Monomial& m) {
    Polynomial p;
    if (!is_zero(coeff)) p.terms_.emplace(m, coeff);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, Rational(-c));
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, Rational(-c));
    return *this;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    Polynomial out = p;
    out += q;
    return out;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    Polynomial out = p;
    out -= q;
    return out;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial out;
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_)
            out.add_term(mp.times(mq), Rational(cp * cq));
    return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial out;
    if (is_zero(c)) return out;
    for (const auto& [m, pc] : p.terms_) out.terms_.emplace(m, Rational(c * pc));
    return out;
}

Polynomial Polynomial::divided_by(const Rational& c) const {
    if (is_zero(c)) throw std::invalid_argument("division by zero");
    return Rational(1 / c) * *this;
}

std::vector<Variable> Polynomial::variables() const {
    std::vector<Variable> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int Polynomial::max_index_of(VarKind kind) const {
    int best = -1;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors())
            if (v.kind() == kind) best = std::max(best, v.index());
    return best;
}

int Polynomial::max_moment_index() const { return max_index_of(VarKind::Moment); }

bool Polynomial::uses_kind(VarKind kind) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors())
            if (v.kind() == kind) return true;
    return false;
}

bool Polynomial::affine_in_moment_x() const {
    for (const auto& [m, c] : terms_) {
        int jet_degree = 0;
        for (const auto& [v, e] : m.factors())
            if (v.kind() == VarKind::MomentX) jet_degree += e;
        if (jet_degree > 1) return false;
    }
    return true;
}

Polynomial partial(const Polynomial& p, Variable v) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e == 0) continue;
        out += Polynomial::term(Rational(c * e), m.divided_by(v));
    }
    return out;
}

}  // namespace benney
