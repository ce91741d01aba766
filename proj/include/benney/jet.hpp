#pragma once

#include <optional>

#include "benney/polynomial.hpp"

namespace benney {

/// Total x-derivative on jet expressions:
///     D_x(p) = dp/dx + sum_j A^j_x dp/dA^j + sum_j A^j_xx dp/dA^j_x.
/// Throws UnsupportedVariable when p already contains second jets (the
/// result would need third jets, which are not modeled).
Polynomial total_derivative_x(const Polynomial& p);

/// Total t-derivative evaluated modulo the moment chain
///     A^j_t = -(A^{j+1}_x + j A^0_x A^{j-1})
/// and its first x-prolongation (for A^j_tx).  The result lives in
/// t, x, moments, first and second jets.  When max_index is given, any
/// moment or first-jet index j in p with j + 1 > max_index raises
/// HorizonExceeded: the substitution would reference a coordinate past the
/// agreed truncation, and that is reported rather than zero-filled.
Polynomial total_derivative_t_on_shell(const Polynomial& p,
                                       std::optional<int> max_index = {});

}  // namespace benney
