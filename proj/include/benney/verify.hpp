#pragma once

#include <map>
#include <string>
#include <vector>

#include "benney/canonical_operator.hpp"

namespace benney {

/// Outcome of substituting an operator into a family of determining chain
/// equations.  Every chain index that was checkable within the horizon has
/// an entry in `residuals`; indices that were not fully expressible are
/// listed in `skipped` with a reason, never silently zero-filled.  The
/// verdict is pass iff every checked residual is the zero polynomial.
struct VerificationReport {
    std::map<std::string, Polynomial> residuals;
    std::vector<std::string> skipped;
    int truncation_cutoff = -1;  // upper bound used for the infinite j-sums

    bool pass() const;
    std::vector<std::string> checked() const;
    std::map<std::string, Polynomial> failures() const;
};

/// Substitutes moment-only coordinates into the two original determining
/// chains:
///   vector chain, for each i with i+1 <= horizon:
///     d(eta^{i+1})/dA^0 - sum_j j A^{j-1} d(eta^i)/dA^j
///       + i A^{i-1} d(eta^0)/dA^0 + i eta^{i-1}
///   tensor chain, for i+1 <= horizon and 0 <= k <= cutoff:
///     d(eta^{i+1})/dA^{k+1} - d(eta^i)/dA^k + i A^{i-1} d(eta^0)/dA^{k+1}
/// The infinite j-sum is truncated at the largest moment index present in
/// the operator; for finitely supported coordinates the dropped tail is
/// identically zero.  Residual keys: "vector:i=3", "tensor:i=3,k=1".
/// Throws FormMismatch unless op is MomentOnly.
VerificationReport verify_restricted(const CanonicalOperator& op);

/// Substitutes jet-form coordinates into the first-order chain
///     D_t(coord^i) + D_x(coord^{i+1}) + i A^{i-1} D_x(coord^0)
///       + i A^0_x coord^{i-1} = 0
/// with D_t taken on shell.  A chain index is checked only when every
/// participating coordinate is present and the on-shell substitution stays
/// within the horizon.  Residual keys: "jet:i=0".  Throws FormMismatch
/// unless op is Jet.
VerificationReport verify_jet(const CanonicalOperator& op);

}  // namespace benney
