// Rhombic (60-degree oblique) coordinates on the triangular tessellation.
//
// A point (x, y) sits at Cartesian (x + y/2, y*sqrt(3)/2); the unit is one
// triangle side. Every tessellation line is rational-linear here:
//
//   Horizontal  y = c        (Cartesian inclination   0)
//   Right       x = c        (Cartesian inclination  60)
//   Left        x + y = c    (Cartesian inclination 120)
//
// so reflections map rational points to rational points and all geometry
// stays exact.

#pragma once

#include "eqbilliards/rational.hpp"

#include <array>
#include <string_view>

namespace eqbilliards {

struct RhombicVector {
    Rational dx;
    Rational dy;

    bool is_zero() const { return dx.is_zero() && dy.is_zero(); }

    friend RhombicVector operator+(const RhombicVector& a, const RhombicVector& b) {
        return {a.dx + b.dx, a.dy + b.dy};
    }
    friend RhombicVector operator-(const RhombicVector& a, const RhombicVector& b) {
        return {a.dx - b.dx, a.dy - b.dy};
    }
    friend RhombicVector operator*(const Rational& s, const RhombicVector& v) {
        return {s * v.dx, s * v.dy};
    }
    friend bool operator==(const RhombicVector&, const RhombicVector&) = default;
};

struct RhombicPoint {
    Rational x;
    Rational y;

    friend RhombicPoint operator+(const RhombicPoint& p, const RhombicVector& v) {
        return {p.x + v.dx, p.y + v.dy};
    }
    friend RhombicVector operator-(const RhombicPoint& a, const RhombicPoint& b) {
        return {a.x - b.x, a.y - b.y};
    }
    friend bool operator==(const RhombicPoint&, const RhombicPoint&) = default;
};

/// Floating Cartesian image of a rhombic point. Output only.
struct CartesianPoint {
    double x = 0.0;
    double y = 0.0;
};

enum class LineFamily { Horizontal, Right, Left };

std::string_view to_string(LineFamily f);

inline constexpr std::array<LineFamily, 3> kLineFamilies{
    LineFamily::Horizontal, LineFamily::Right, LineFamily::Left};

struct GridLine {
    LineFamily family = LineFamily::Horizontal;
    Rational offset;

    /// Value of the line's defining linear form at p (y, x or x+y).
    Rational level(const RhombicPoint& p) const;
    bool contains(const RhombicPoint& p) const { return level(p) == offset; }

    friend bool operator==(const GridLine&, const GridLine&) = default;
};

/// The linear form defining lines of a family, applied to a vector.
Rational family_form(LineFamily f, const RhombicVector& v);

/// A vector running along lines of the given family.
RhombicVector family_direction(LineFamily f);

CartesianPoint to_cartesian(const RhombicPoint& p);
CartesianPoint to_cartesian(const RhombicVector& v);

/// Squared Euclidean length: dx^2 + dx*dy + dy^2.
Rational norm_squared(const RhombicVector& v);

/// Euclidean inner product in rhombic components.
Rational dot(const RhombicVector& a, const RhombicVector& b);

/// Determinant of the rhombic components. The Cartesian cross product is
/// this value times sqrt(3)/2, so the sign and zero set agree.
Rational cross(const RhombicVector& a, const RhombicVector& b);

RhombicPoint reflect(const GridLine& line, const RhombicPoint& p);
RhombicVector reflect_direction(LineFamily family, const RhombicVector& v);

/// Affine isometry p -> M p + t with an integer linear part. Compositions
/// of grid reflections stay in this form.
class Isometry {
public:
    static Isometry identity();
    static Isometry reflection(const GridLine& line);

    RhombicPoint apply(const RhombicPoint& p) const;
    RhombicVector apply(const RhombicVector& v) const;

    /// (*this) after `inner`: p -> this(inner(p)).
    Isometry compose(const Isometry& inner) const;

    friend bool operator==(const Isometry&, const Isometry&) = default;

private:
    // Row-major 2x2 linear part.
    std::array<int, 4> m_{1, 0, 0, 1};
    Rational tx_;
    Rational ty_;
};

}  // namespace eqbilliards
