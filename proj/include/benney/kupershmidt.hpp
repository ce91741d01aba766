#pragma once

#include <map>

#include "benney/polynomial.hpp"

namespace benney {

struct KupershmidtResult {
    /// True when every coefficient of sum_j j A^{j-1} dH/dA^j is an integer
    /// multiple of s.
    bool divisible;
    /// The induced predecessor candidate (that sum divided by s); for a
    /// consistent family member it is weighted-homogeneous of degree s+1.
    Polynomial predecessor;
};

/// Checks the descent identity sum_j j A^{j-1} dH/dA^j = s * H_prev for a
/// weighted-homogeneous H of degree s+2.  Throws DegreeMismatch when H
/// fails that precondition.
KupershmidtResult kupershmidt_check(const Polynomial& h, int s);

/// Tensor coordinate built from two consecutive family members:
///   eta[i,j; s] = sum_k k dH^s/dA^k [i+k == j+1]
///               + s sum_{k=0}^{s-j-2} (i+k) A^{i+k-1} dH^{s-1}/dA^{j+k+1}.
/// Empty sums are zero and the k with i+k == 0 contributes nothing, so
/// A^{-1} never materializes.  Requires h_family[s]; h_family[s-1] only if
/// the second sum has a nonempty range.  Throws MissingH when a required
/// member is absent.
Polynomial eta_tensor_from_h(const std::map<int, Polynomial>& h_family, int i,
                             int j, int s);

}  // namespace benney
