#pragma once

#include <initializer_list>
#include <map>
#include <vector>

#include "benney/rational.hpp"
#include "benney/variable.hpp"

namespace benney {

/// Product of variable powers with positive exponents, kept sorted by the
/// canonical variable order.  The empty product is the constant monomial.
class Monomial {
public:
    using Factors = std::vector<std::pair<Variable, int>>;

    Monomial() = default;
    explicit Monomial(Variable v, int exponent = 1);

    const Factors& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    int exponent(Variable v) const;
    int total_degree() const;

    Monomial times(const Monomial& other) const;
    /// Removes one power of v; precondition exponent(v) >= 1.
    Monomial divided_by(Variable v) const;

    bool operator==(const Monomial&) const = default;

private:
    Factors factors_;
};

/// Canonical term order: ascending total degree, and inside a degree the
/// monomial with the higher power of the highest distinguishing variable
/// comes first.  Serialization iterates this order, so output is
/// deterministic and diff-friendly.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the tagged variables with exact
/// rational coefficients.  Canonical form is maintained as an invariant
/// (no zero coefficients stored), so operator== is mathematical equality.
/// Values are immutable in spirit: every operation returns a new value and
/// shared Polynomials may be read from any thread.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;  // zero
    Polynomial(long constant);
    Polynomial(const Rational& constant);
    static Polynomial variable(Variable v);
    static Polynomial term(const Rational& coeff, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    Polynomial divided_by(const Rational& c) const;  // c must be nonzero

    bool operator==(const Polynomial&) const = default;

    /// Every distinct variable occurring in some term, in canonical order.
    std::vector<Variable> variables() const;
    /// Largest index among Moment variables, or -1 when none occur.
    int max_moment_index() const;
    /// Largest index among variables of the given kind, or -1.
    int max_index_of(VarKind kind) const;
    bool uses_kind(VarKind kind) const;
    /// Total degree in the MomentX variables of every term is <= 1.
    bool affine_in_moment_x() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

/// Formal partial derivative; linear, satisfies the Leibniz rule, and
/// commutes with itself across variables.
Polynomial partial(const Polynomial& p, Variable v);

}  // namespace benney
