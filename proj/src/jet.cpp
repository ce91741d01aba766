#include "benney/jet.hpp"

#include <string>

#include "benney/errors.hpp"

namespace benney {

namespace {

Polynomial var_poly(Variable v) { return Polynomial::variable(v); }

// Right-hand side of the chain solved for the time derivative:
//     A^j_t = -(A^{j+1}_x + j A^0_x A^{j-1}).
Polynomial moment_time_derivative(int j) {
    Polynomial p = Rational(-1) * var_poly(Variable::moment_x(j + 1));
    if (j >= 1)
        p -= Rational(j) * (var_poly(Variable::moment_x(0)) *
                            var_poly(Variable::moment(j - 1)));
    return p;
}

}  // namespace

Polynomial total_derivative_x(const Polynomial& p) {
    if (p.uses_kind(VarKind::MomentXX))
        throw UnsupportedVariable("total_derivative_x would need third jets");

    Polynomial out = partial(p, Variable::space());
    for (Variable v : p.variables()) {
        if (v.kind() == VarKind::Moment)
            out += var_poly(Variable::moment_x(v.index())) * partial(p, v);
        else if (v.kind() == VarKind::MomentX)
            out += var_poly(Variable::moment_xx(v.index())) * partial(p, v);
    }
    return out;
}

Polynomial total_derivative_t_on_shell(const Polynomial& p,
                                       std::optional<int> max_index) {
    if (p.uses_kind(VarKind::MomentXX))
        throw UnsupportedVariable("total_derivative_t_on_shell expects first jets at most");

    Polynomial out = partial(p, Variable::time());
    for (Variable v : p.variables()) {
        if (v.kind() != VarKind::Moment && v.kind() != VarKind::MomentX) continue;
        if (max_index && v.index() + 1 > *max_index)
            throw HorizonExceeded("substituting the time derivative of " + v.name() +
                                  " requires index " + std::to_string(v.index() + 1) +
                                  " beyond horizon " + std::to_string(*max_index));
        if (v.kind() == VarKind::Moment) {
            out += moment_time_derivative(v.index()) * partial(p, v);
        } else {
            // A^j_tx via the x-prolonged chain; introduces second jets.
            out += total_derivative_x(moment_time_derivative(v.index())) * partial(p, v);
        }
    }
    return out;
}

}  // namespace benney
