#include "benney/canonical_operator.hpp"

#include <stdexcept>
#include <string>

#include "benney/errors.hpp"

namespace benney {

namespace {

bool moment_only_vars(const Polynomial& p) {
    for (Variable v : p.variables())
        if (!v.is_moment()) return false;
    return true;
}

bool jet_form_vars(const Polynomial& p) {
    for (Variable v : p.variables())
        if (v.kind() == VarKind::MomentXX) return false;
    return p.affine_in_moment_x();
}

Polynomial moment_poly(int i) { return Polynomial::variable(Variable::moment(i)); }
Polynomial jet_poly(int i) { return Polynomial::variable(Variable::moment_x(i)); }

}  // namespace

CanonicalOperator CanonicalOperator::moment_only(std::vector<Polynomial> coords) {
    if (coords.empty()) throw std::invalid_argument("operator needs a coordinate");
    std::vector<std::optional<Polynomial>> boxed;
    boxed.reserve(coords.size());
    for (Polynomial& p : coords) {
        if (!moment_only_vars(p))
            throw FormMismatch("moment-only coordinate uses a non-moment variable");
        boxed.emplace_back(std::move(p));
    }
    return CanonicalOperator(OperatorForm::MomentOnly, std::move(boxed));
}

CanonicalOperator CanonicalOperator::jet(std::vector<std::optional<Polynomial>> coords) {
    if (coords.empty()) throw std::invalid_argument("operator needs a coordinate");
    for (const auto& p : coords)
        if (p && !jet_form_vars(*p))
            throw FormMismatch("jet coordinate must be affine in first jets and free of second jets");
    return CanonicalOperator(OperatorForm::Jet, std::move(coords));
}

CanonicalOperator CanonicalOperator::from_row(const EtaRow& row) {
    return moment_only(row.coordinates());
}

bool CanonicalOperator::has_coord(int i) const {
    return i >= 0 && i <= horizon() && coords_[i].has_value();
}

const Polynomial& CanonicalOperator::coord(int i) const {
    if (!has_coord(i))
        throw std::out_of_range("coordinate " + std::to_string(i) + " is absent");
    return *coords_[i];
}

int CanonicalOperator::max_moment_index() const {
    int best = -1;
    for (const auto& p : coords_)
        if (p) best = std::max(best, p->max_moment_index());
    return best;
}

std::string to_string(PointGeneratorId id) {
    switch (id) {
        case PointGeneratorId::X1: return "X1";
        case PointGeneratorId::X2: return "X2";
        case PointGeneratorId::X3: return "X3";
        case PointGeneratorId::X4: return "X4";
        case PointGeneratorId::X5: return "X5";
    }
    return {};
}

PointGeneratorId point_generator_from_string(const std::string& name) {
    if (name == "X1") return PointGeneratorId::X1;
    if (name == "X2") return PointGeneratorId::X2;
    if (name == "X3") return PointGeneratorId::X3;
    if (name == "X4") return PointGeneratorId::X4;
    if (name == "X5") return PointGeneratorId::X5;
    throw ParseError("unknown generator '" + name + "' (expected X1..X5)");
}

std::map<PointGeneratorId, CanonicalOperator> point_generators(int horizon) {
    if (horizon < 2) throw std::invalid_argument("point_generators: horizon must be >= 2");
    const Polynomial t = Polynomial::variable(Variable::time());
    const Polynomial x = Polynomial::variable(Variable::space());

    // Advective combination A^{i+1}_x + i A^{i-1} A^0_x shared by X1 and X4.
    const auto flux = [&](int i) {
        Polynomial p = jet_poly(i + 1);
        if (i >= 1) p += Rational(i) * (moment_poly(i - 1) * jet_poly(0));
        return p;
    };

    std::vector<std::optional<Polynomial>> x1, x2, x3, x4, x5;
    for (int i = 0; i <= horizon; ++i) {
        const bool top = i == horizon;  // flux(i) would need A^{horizon+1}_x
        x1.push_back(top ? std::nullopt : std::optional(flux(i)));
        x2.push_back(jet_poly(i));
        Polynomial boost = Rational(-1) * (t * jet_poly(i));
        if (i >= 1) boost += Rational(i) * moment_poly(i - 1);
        x3.push_back(std::move(boost));
        x4.push_back(top ? std::nullopt
                         : std::optional(Rational(i + 2) * moment_poly(i) -
                                         t * flux(i)));
        x5.push_back(Rational(i + 2) * moment_poly(i) - x * jet_poly(i));
    }

    std::map<PointGeneratorId, CanonicalOperator> out;
    out.emplace(PointGeneratorId::X1, CanonicalOperator::jet(std::move(x1)));
    out.emplace(PointGeneratorId::X2, CanonicalOperator::jet(std::move(x2)));
    out.emplace(PointGeneratorId::X3, CanonicalOperator::jet(std::move(x3)));
    out.emplace(PointGeneratorId::X4, CanonicalOperator::jet(std::move(x4)));
    out.emplace(PointGeneratorId::X5, CanonicalOperator::jet(std::move(x5)));
    return out;
}

CanonicalOperator embed_point_symmetry(const std::vector<Polynomial>& eta,
                                       const Polynomial& xi1,
                                       const Polynomial& xi2) {
    if (eta.empty()) throw std::invalid_argument("embed: empty coordinate list");
    for (Variable v : xi1.variables())
        if (v.kind() != VarKind::Time)
            throw std::invalid_argument("xi1 may depend on t only");
    for (Variable v : xi2.variables())
        if (v.kind() != VarKind::Time && v.kind() != VarKind::Space)
            throw std::invalid_argument("xi2 may depend on t and x only");

    const int horizon = static_cast<int>(eta.size()) - 1;
    std::vector<std::optional<Polynomial>> coords;
    for (int i = 0; i <= horizon; ++i) {
        if (!moment_only_vars(eta[i]))
            throw FormMismatch("eta coordinates must be moment-only");
        if (!xi1.is_zero() && i == horizon) {
            coords.push_back(std::nullopt);  // would need A^{horizon+1}_x
            continue;
        }
        Polynomial c = eta[i];
        if (!xi1.is_zero()) {
            Polynomial flux = jet_poly(i + 1);
            if (i >= 1) flux += Rational(i) * (moment_poly(i - 1) * jet_poly(0));
            c += xi1 * flux;
        }
        c -= xi2 * jet_poly(i);
        coords.push_back(std::move(c));
    }
    return CanonicalOperator::jet(std::move(coords));
}

CanonicalOperator embed_point_symmetry(const EtaRow& eta, const Polynomial& xi1,
                                       const Polynomial& xi2) {
    return embed_point_symmetry(eta.coordinates(), xi1, xi2);
}

CanonicalOperator classical_point_operator(const ClassicalCoefficients& c,
                                           int horizon) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    const Polynomial t = Polynomial::variable(Variable::time());
    const Polynomial x = Polynomial::variable(Variable::space());

    Polynomial xi1 = Polynomial(c.time_shift) + c.time_scaling * t;
    Polynomial xi2 = Polynomial(c.space_shift) + c.galilean * t + c.space_scaling * x;

    std::vector<Polynomial> eta;
    const Rational stretch = c.space_scaling - c.time_scaling;
    for (int i = 0; i <= horizon; ++i) {
        Polynomial e = stretch * (Rational(i + 2) * moment_poly(i));
        if (i >= 1) e += c.galilean * (Rational(i) * moment_poly(i - 1));
        eta.push_back(std::move(e));
    }
    return embed_point_symmetry(eta, xi1, xi2);
}

CanonicalOperator lie_bracket(const CanonicalOperator& a, const CanonicalOperator& b) {
    if (a.form() != OperatorForm::MomentOnly || b.form() != OperatorForm::MomentOnly)
        throw FormMismatch("lie_bracket expects moment-only operators");

    const int n = std::min(a.horizon(), b.horizon());

    // Directional derivative sum_j u^j d(p)/d(A^j); nullopt when p depends
    // on a coordinate the operand does not provide.
    const auto advect = [n](const CanonicalOperator& u, const Polynomial& p)
        -> std::optional<Polynomial> {
        Polynomial out;
        for (Variable v : p.variables()) {
            if (v.index() > n || !u.has_coord(v.index())) return std::nullopt;
            out += u.coord(v.index()) * partial(p, v);
        }
        return out;
    };

    std::vector<Polynomial> coords;
    for (int i = 0; i <= n; ++i) {
        auto forward = advect(a, b.coord(i));
        auto backward = advect(b, a.coord(i));
        if (!forward || !backward) break;  // horizon shrinks here
        coords.push_back(*forward - *backward);
    }
    if (coords.empty()) throw HorizonExceeded("bracket has no expressible coordinate");
    return CanonicalOperator::moment_only(std::move(coords));
}

}  // namespace benney
