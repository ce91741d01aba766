#include "benney/grading.hpp"

#include <stdexcept>

#include "benney/errors.hpp"

namespace benney {

namespace {

int monomial_weight(const Monomial& m) {
    int w = 0;
    for (const auto& [v, e] : m.factors()) w += v.weight() * e;
    return w;
}

}  // namespace

WeightedDegree weighted_degree(const Polynomial& p) {
    if (p.is_zero()) return WeightedDegree::of(0);
    bool first = true;
    int d = 0;
    for (const auto& [m, c] : p.terms()) {
        int w = monomial_weight(m);
        if (first) {
            d = w;
            first = false;
        } else if (w != d) {
            return WeightedDegree::inhomogeneous();
        }
    }
    return WeightedDegree::of(d);
}

bool is_homogeneous_of(const Polynomial& p, int d) {
    return p.is_zero() || weighted_degree(p) == WeightedDegree::of(d);
}

Polynomial euler_reconstruct(const std::map<Variable, Polynomial>& gradient,
                             int d) {
    if (d <= 0) throw std::invalid_argument("euler_reconstruct: d must be positive");
    Polynomial weighted_sum;
    for (const auto& [v, component] : gradient) {
        if (!v.is_moment())
            throw std::invalid_argument("euler_reconstruct: non-moment gradient key " + v.name());
        if (!is_homogeneous_of(component, d - v.weight()))
            throw NonHomogeneousGradient(
                "gradient component for " + v.name() +
                " is not weighted-homogeneous of degree " + std::to_string(d - v.weight()));
        weighted_sum += Rational(v.weight()) * (Polynomial::variable(v) * component);
    }
    Polynomial result = weighted_sum.divided_by(Rational(d));
    for (const auto& [v, component] : gradient) {
        if (!(partial(result, v) == component))
            throw GradientMismatch("gradient is not exact at " + v.name());
    }
    // Variables absent from the map must not appear in the result either.
    for (Variable v : result.variables())
        if (!gradient.count(v))
            throw GradientMismatch("reconstruction introduced " + v.name() +
                                   " outside the gradient support");
    return result;
}

}  // namespace benney
