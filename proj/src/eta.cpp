#include "benney/eta.hpp"

#include <stdexcept>
#include <string>

#include "benney/errors.hpp"

namespace benney {

namespace {
const Polynomial kZero{};
}

EtaRow::EtaRow(int basis_index, int horizon, std::vector<Polynomial> entries)
    : basis_index_(basis_index), horizon_(horizon), entries_(std::move(entries)) {
    if (basis_index_ < 0) throw std::invalid_argument("negative basis index");
    if (static_cast<int>(entries_.size()) != horizon_ - basis_index_ + 1)
        throw std::invalid_argument("entry count does not match horizon");
}

const Polynomial& EtaRow::entry(int i) const {
    if (i < 0 || i > horizon_)
        throw std::out_of_range("EtaRow::entry: index " + std::to_string(i) +
                                " outside horizon " + std::to_string(horizon_));
    if (i < basis_index_) return kZero;
    return entries_[i - basis_index_];
}

std::vector<Polynomial> EtaRow::coordinates() const {
    std::vector<Polynomial> out(basis_index_, kZero);
    out.insert(out.end(), entries_.begin(), entries_.end());
    return out;
}

EtaMatrix::EtaMatrix(int horizon, std::vector<EtaRow> rows)
    : horizon_(horizon), rows_(std::move(rows)) {
    for (const EtaRow& r : rows_)
        if (r.horizon() != horizon_)
            throw std::invalid_argument("row horizon mismatch");
}

std::vector<ExactnessViolation> check_exactness(
    const std::map<Variable, Polynomial>& gradient) {
    // The variable set is the union of the keys and everything occurring
    // inside the components, so a map like {A0 -> A1} is caught even though
    // the implicit zero component for A1 was never spelled out.
    std::map<Variable, const Polynomial*> components;
    for (const auto& [v, p] : gradient) components[v] = &p;
    for (const auto& [v, p] : gradient)
        for (Variable u : p.variables()) components.try_emplace(u, &kZero);

    std::vector<ExactnessViolation> violations;
    for (auto it = components.begin(); it != components.end(); ++it)
        for (auto jt = std::next(it); jt != components.end(); ++jt) {
            Polynomial residual =
                partial(*it->second, jt->first) - partial(*jt->second, it->first);
            if (!residual.is_zero())
                violations.push_back({it->first, jt->first, std::move(residual)});
        }
    return violations;
}

namespace {

// Shared by gradient_of_next and the generator, which needs it while the row
// is still under construction.  `entries` holds eta^k..eta^i.
std::map<Variable, Polynomial> gradient_from_entries(
    int k, const std::vector<Polynomial>& entries, int i) {
    const auto entry = [&](int idx) -> const Polynomial& {
        if (idx < k) return kZero;
        return entries.at(idx - k);
    };

    std::map<Variable, Polynomial> gradient;

    // Vector-chain component: starts at j = 1 because the j = 0 summand
    // carries the factor j and must never materialize A^{-1}.
    Polynomial a0;
    for (int j = 1; j <= i - 2; ++j)
        a0 += Rational(j) *
              (Polynomial::variable(Variable::moment(j - 1)) *
               partial(entry(i), Variable::moment(j)));
    a0 -= Rational(i) * entry(i - 1);
    if (!a0.is_zero()) gradient[Variable::moment(0)] = std::move(a0);

    // Tensor-chain components: d(eta^{i+1})/d(A^{m+1}) = d(eta^i)/d(A^m).
    for (int m = 0; m <= i - 2; ++m) {
        Polynomial component = partial(entry(i), Variable::moment(m));
        if (!component.is_zero())
            gradient[Variable::moment(m + 1)] = std::move(component);
    }
    return gradient;
}

}  // namespace

std::map<Variable, Polynomial> gradient_of_next(const EtaRow& row, int i) {
    if (i < row.basis_index() || i >= row.horizon())
        throw std::out_of_range("gradient_of_next: index outside row");
    std::vector<Polynomial> entries;
    for (int idx = row.basis_index(); idx <= i; ++idx)
        entries.push_back(row.entry(idx));
    return gradient_from_entries(row.basis_index(), entries, i);
}

EtaRow generate_eta_row(int basis_index, int horizon) {
    if (basis_index < 0) throw std::invalid_argument("negative basis index");
    if (horizon < basis_index + 1)
        throw HorizonTooSmall("horizon " + std::to_string(horizon) +
                              " cannot hold boundary entries of row " +
                              std::to_string(basis_index));

    std::vector<Polynomial> entries;
    entries.push_back(Polynomial(1));  // eta^k
    entries.push_back(Polynomial());   // eta^{k+1}

    for (int i = basis_index + 1; i < horizon; ++i) {
        auto gradient = gradient_from_entries(basis_index, entries, i);

        auto violations = check_exactness(gradient);
        if (!violations.empty())
            throw ExactnessFailure("chain gradient for eta^" + std::to_string(i + 1) +
                                   " of row " + std::to_string(basis_index) +
                                   " is not exact");

        // Degree i+1-k is positive here, so weighted homogeneity forces the
        // integration constant to zero; euler_reconstruct re-verifies.
        Polynomial next = euler_reconstruct(gradient, i + 1 - basis_index);

        // Support law: the new entry may involve A^0..A^{i-1} only.
        for (Variable v : next.variables())
            if (!v.is_moment() || v.index() >= i)
                throw ExactnessFailure("support law violated by eta^" +
                                       std::to_string(i + 1) + " of row " +
                                       std::to_string(basis_index));
        entries.push_back(std::move(next));
    }
    return EtaRow(basis_index, horizon, std::move(entries));
}

EtaMatrix generate_eta_matrix(int max_row, int horizon) {
    if (max_row < 0) throw std::invalid_argument("negative row count");
    std::vector<EtaRow> rows;
    rows.reserve(max_row + 1);
    for (int k = 0; k <= max_row; ++k) rows.push_back(generate_eta_row(k, horizon));
    return EtaMatrix(horizon, std::move(rows));
}

}  // namespace benney
