#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace benney {

enum class VarKind : std::uint8_t { Time, Space, Moment, MomentX, MomentXX };

/// A tagged symbol: t, x, a moment A^i, or one of its formal spatial
/// derivatives A^i_x, A^i_xx.  Jet variables are independent coordinates;
/// nothing here differentiates anything.
///
/// Canonical total order: t < x < A^0 < A^1 < ... < A^0_x < ... < A^0_xx < ...
class Variable {
public:
    static Variable time() { return {VarKind::Time, 0}; }
    static Variable space() { return {VarKind::Space, 0}; }
    static Variable moment(int i) { return {VarKind::Moment, i}; }
    static Variable moment_x(int i) { return {VarKind::MomentX, i}; }
    static Variable moment_xx(int i) { return {VarKind::MomentXX, i}; }

    VarKind kind() const { return kind_; }

    /// Meaningful for the moment kinds only; t and x carry index 0.
    int index() const { return index_; }

    bool is_moment() const { return kind_ == VarKind::Moment; }

    /// Grading weight: [A^i] = i+2, extended by [A^i_x] = i+3,
    /// [A^i_xx] = i+4, [x] = -1, [t] = -2 so that every equation of the
    /// moment chain is weighted-homogeneous.
    int weight() const;

    /// "t", "x", "A3", "A3_x", "A3_xx" — the spelling used by the text
    /// format and the JSON schemas.
    std::string name() const;

    friend auto operator<=>(const Variable&, const Variable&) = default;

private:
    Variable(VarKind k, int i) : kind_(k), index_(i) {}

    VarKind kind_;
    int index_;
};

/// Inverse of Variable::name(); throws ParseError on unknown spellings.
Variable variable_from_name(const std::string& name);

}  // namespace benney
