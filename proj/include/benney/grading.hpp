#pragma once

#include <map>

#include "benney/polynomial.hpp"

namespace benney {

/// Result of grading a polynomial under the weights of Variable::weight():
/// either every monomial carries the same total weight d, or the polynomial
/// is inhomogeneous.  The zero polynomial grades as 0 by convention, so the
/// vanishing residual of a satisfied chain equation never errors.
class WeightedDegree {
public:
    static WeightedDegree of(int d) { return WeightedDegree(true, d); }
    static WeightedDegree inhomogeneous() { return WeightedDegree(false, 0); }

    bool is_homogeneous() const { return homogeneous_; }
    int value() const { return degree_; }  // meaningful when homogeneous

    bool operator==(const WeightedDegree&) const = default;

private:
    WeightedDegree(bool h, int d) : homogeneous_(h), degree_(d) {}

    bool homogeneous_;
    int degree_;
};

WeightedDegree weighted_degree(const Polynomial& p);

/// Zero counts as homogeneous of every degree.
bool is_homogeneous_of(const Polynomial& p, int d);

/// Integrates a gradient over the moment variables using the weighted Euler
/// identity: for a weighted-homogeneous potential of degree d,
///     sum_m (m+2) A^m d(eta)/d(A^m) = d * eta,
/// so eta = (1/d) sum_m (m+2) A^m g[A^m].  Single pass, exact, and
/// self-checking: the result is re-differentiated and compared against the
/// input before being returned.
///
/// Preconditions: d > 0; keys are Moment variables; each component is
/// weighted-homogeneous of degree d - weight(key) (zero components allowed).
/// Throws NonHomogeneousGradient / GradientMismatch accordingly.
Polynomial euler_reconstruct(const std::map<Variable, Polynomial>& gradient,
                             int d);

}  // namespace benney
