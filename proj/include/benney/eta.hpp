#pragma once

#include <map>
#include <vector>

#include "benney/grading.hpp"
#include "benney/polynomial.hpp"

namespace benney {

/// One basis solution of the determining chains: entries eta^k ... eta^N for
/// basis index k, generated under the boundary scheme eta^k = 1,
/// eta^{k+1} = 0.  Entries below the diagonal (i < k) are identically zero
/// and stored only implicitly.
class EtaRow {
public:
    EtaRow(int basis_index, int horizon, std::vector<Polynomial> entries);

    int basis_index() const { return basis_index_; }
    int horizon() const { return horizon_; }

    /// eta^i for 0 <= i <= horizon (zero below the basis index).
    const Polynomial& entry(int i) const;

    /// The full coordinate list eta^0 ... eta^N including the leading zeros.
    std::vector<Polynomial> coordinates() const;

    bool operator==(const EtaRow&) const = default;

private:
    int basis_index_;
    int horizon_;
    std::vector<Polynomial> entries_;  // entries_[i - basis_index_]
};

/// Rows 0..K of the basis-solution matrix at a common horizon.  Rows are
/// mutually independent; the matrix is just their container.
class EtaMatrix {
public:
    EtaMatrix(int horizon, std::vector<EtaRow> rows);

    int horizon() const { return horizon_; }
    int max_row() const { return static_cast<int>(rows_.size()) - 1; }
    const std::vector<EtaRow>& rows() const { return rows_; }
    const EtaRow& row(int k) const { return rows_.at(k); }

    bool operator==(const EtaMatrix&) const = default;

private:
    int horizon_;
    std::vector<EtaRow> rows_;
};

struct ExactnessViolation {
    Variable u;
    Variable v;
    Polynomial residual;  // d(g[u])/dv - d(g[v])/du, nonzero
};

/// Symmetry-of-second-derivatives check for a would-be gradient.  Variables
/// appearing inside components but missing from the key set count as zero
/// components.  Empty result means the map is exact.
std::vector<ExactnessViolation> check_exactness(
    const std::map<Variable, Polynomial>& gradient);

/// Full gradient of the next entry eta^{i+1} of a row, assembled from the
/// two recursion chains: the A^0 component collects
///     sum_{j=1}^{i-2} j A^{j-1} d(eta^i)/d(A^j)  -  i eta^{i-1},
/// and the A^{m+1} component is d(eta^i)/d(A^m).  Components beyond A^{i-1}
/// never occur.  Requires basis_index <= i < horizon.
std::map<Variable, Polynomial> gradient_of_next(const EtaRow& row, int i);

/// Integrates the simplified determining chains row by row: starting from
/// the boundary entries, each next entry is reconstructed from its gradient
/// via the weighted Euler identity with degree i+1-k.  Exactness and the
/// support law are asserted at every step (ExactnessFailure on violation —
/// an implementation bug, not a data condition).  Throws HorizonTooSmall if
/// horizon < basis_index + 1.
EtaRow generate_eta_row(int basis_index, int horizon);

/// Rows 0..max_row, each generated independently.
EtaMatrix generate_eta_matrix(int max_row, int horizon);

}  // namespace benney
