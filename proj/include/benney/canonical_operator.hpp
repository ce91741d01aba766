#pragma once

#include <map>
#include <optional>
#include <vector>

#include "benney/eta.hpp"
#include "benney/polynomial.hpp"

namespace benney {

enum class OperatorForm { MomentOnly, Jet };

/// Coordinates of an evolutionary symmetry generator, one polynomial per
/// dependent variable A^0 .. A^N.  MomentOnly coordinates use moment
/// variables only; Jet coordinates may use t, x, moments and first jets and
/// must be affine in the jets.  Top coordinates whose defining expression
/// would reach past the horizon are stored as absent, never zero-filled.
class CanonicalOperator {
public:
    static CanonicalOperator moment_only(std::vector<Polynomial> coords);
    static CanonicalOperator jet(std::vector<std::optional<Polynomial>> coords);
    static CanonicalOperator from_row(const EtaRow& row);

    OperatorForm form() const { return form_; }
    int horizon() const { return static_cast<int>(coords_.size()) - 1; }
    bool has_coord(int i) const;
    const Polynomial& coord(int i) const;  // throws if absent
    const std::vector<std::optional<Polynomial>>& coords() const { return coords_; }

    /// Largest moment index appearing in any present coordinate, or -1.
    int max_moment_index() const;

    bool operator==(const CanonicalOperator&) const = default;

private:
    CanonicalOperator(OperatorForm form, std::vector<std::optional<Polynomial>> coords)
        : form_(form), coords_(std::move(coords)) {}

    OperatorForm form_;
    std::vector<std::optional<Polynomial>> coords_;
};

/// The five classical generators in evolutionary form, restricted to the
/// moment manifold.  X1 advances time, X2 space, X3 is the Galilean boost,
/// X4 scales time, X5 scales space.
enum class PointGeneratorId { X1, X2, X3, X4, X5 };

std::string to_string(PointGeneratorId id);
PointGeneratorId point_generator_from_string(const std::string& name);

/// Coordinates: X1: A^{i+1}_x + i A^{i-1} A^0_x;  X2: A^i_x;
/// X3: i A^{i-1} - t A^i_x;  X4: (i+2) A^i - t (A^{i+1}_x + i A^{i-1} A^0_x);
/// X5: (i+2) A^i - x A^i_x.  The X1/X4 coordinates at i = horizon would
/// reference A^{horizon+1}_x and are absent.  Requires horizon >= 2.
std::map<PointGeneratorId, CanonicalOperator> point_generators(int horizon);

/// Lifts a time/space-independent symmetry (or any coordinate family) to the
/// evolutionary coordinates of a point generator with infinitesimals xi1 dt
/// and xi2 dx:
///     coord^i = eta^i + xi1 (A^{i+1}_x + i A^{i-1} A^0_x) - xi2 A^i_x.
/// xi1 may depend on t only, xi2 on t and x.  When xi1 is nonzero the top
/// coordinate is absent (it would need A^{horizon+1}_x).
CanonicalOperator embed_point_symmetry(const std::vector<Polynomial>& eta,
                                       const Polynomial& xi1,
                                       const Polynomial& xi2);
CanonicalOperator embed_point_symmetry(const EtaRow& eta, const Polynomial& xi1,
                                       const Polynomial& xi2);

/// The five-parameter classical family: xi1 = time_shift + time_scaling * t,
/// xi2 = space_shift + galilean * t + space_scaling * x,
/// eta^i = i A^{i-1} galilean + (i+2) A^i (space_scaling - time_scaling).
struct ClassicalCoefficients {
    Rational space_shift{0};    // X2 direction
    Rational galilean{0};       // X3 direction
    Rational space_scaling{0};  // X5 direction
    Rational time_shift{0};     // X1 direction
    Rational time_scaling{0};   // X4 direction
};

CanonicalOperator classical_point_operator(const ClassicalCoefficients& c,
                                           int horizon);

/// Bracket of evolutionary vector fields with moment-only coordinates:
///     [a,b]^i = sum_j (a^j d(b^i)/d(A^j) - b^j d(a^i)/d(A^j)).
/// The horizon shrinks to the largest index whose sum is fully expressible
/// from the operands.
CanonicalOperator lie_bracket(const CanonicalOperator& a, const CanonicalOperator& b);

}  // namespace benney
