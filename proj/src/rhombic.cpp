#include "eqbilliards/rhombic.hpp"

#include <cmath>

namespace eqbilliards {

namespace {
const double kHalfSqrt3 = std::sqrt(3.0) / 2.0;
}

std::string_view to_string(LineFamily f) {
    switch (f) {
        case LineFamily::Horizontal: return "horizontal";
        case LineFamily::Right: return "right";
        case LineFamily::Left: return "left";
    }
    return "?";
}

Rational family_form(LineFamily f, const RhombicVector& v) {
    switch (f) {
        case LineFamily::Horizontal: return v.dy;
        case LineFamily::Right: return v.dx;
        case LineFamily::Left: return v.dx + v.dy;
    }
    return {};
}

Rational GridLine::level(const RhombicPoint& p) const {
    return family_form(family, RhombicVector{p.x, p.y});
}

RhombicVector family_direction(LineFamily f) {
    switch (f) {
        case LineFamily::Horizontal: return {1, 0};
        case LineFamily::Right: return {0, 1};
        case LineFamily::Left: return {-1, 1};
    }
    return {};
}

CartesianPoint to_cartesian(const RhombicPoint& p) {
    const double x = p.x.to_double();
    const double y = p.y.to_double();
    return {x + y / 2.0, y * kHalfSqrt3};
}

CartesianPoint to_cartesian(const RhombicVector& v) {
    return to_cartesian(RhombicPoint{v.dx, v.dy});
}

Rational norm_squared(const RhombicVector& v) {
    return v.dx * v.dx + v.dx * v.dy + v.dy * v.dy;
}

Rational dot(const RhombicVector& a, const RhombicVector& b) {
    return a.dx * b.dx + a.dy * b.dy + (a.dx * b.dy + a.dy * b.dx) / 2;
}

Rational cross(const RhombicVector& a, const RhombicVector& b) {
    return a.dx * b.dy - a.dy * b.dx;
}

RhombicPoint reflect(const GridLine& line, const RhombicPoint& p) {
    const Rational& c = line.offset;
    switch (line.family) {
        case LineFamily::Horizontal: return {p.x + p.y - c, 2 * c - p.y};
        case LineFamily::Right: return {2 * c - p.x, p.x + p.y - c};
        case LineFamily::Left: return {c - p.y, c - p.x};
    }
    return p;
}

RhombicVector reflect_direction(LineFamily family, const RhombicVector& v) {
    switch (family) {
        case LineFamily::Horizontal: return {v.dx + v.dy, -v.dy};
        case LineFamily::Right: return {-v.dx, v.dx + v.dy};
        case LineFamily::Left: return {-v.dy, -v.dx};
    }
    return v;
}

Isometry Isometry::identity() { return {}; }

Isometry Isometry::reflection(const GridLine& line) {
    Isometry r;
    const Rational& c = line.offset;
    switch (line.family) {
        case LineFamily::Horizontal:
            r.m_ = {1, 1, 0, -1};
            r.tx_ = -c;
            r.ty_ = 2 * c;
            break;
        case LineFamily::Right:
            r.m_ = {-1, 0, 1, 1};
            r.tx_ = 2 * c;
            r.ty_ = -c;
            break;
        case LineFamily::Left:
            r.m_ = {0, -1, -1, 0};
            r.tx_ = c;
            r.ty_ = c;
            break;
    }
    return r;
}

RhombicPoint Isometry::apply(const RhombicPoint& p) const {
    return {m_[0] * p.x + m_[1] * p.y + tx_, m_[2] * p.x + m_[3] * p.y + ty_};
}

RhombicVector Isometry::apply(const RhombicVector& v) const {
    return {m_[0] * v.dx + m_[1] * v.dy, m_[2] * v.dx + m_[3] * v.dy};
}

Isometry Isometry::compose(const Isometry& inner) const {
    Isometry r;
    const auto& a = m_;
    const auto& b = inner.m_;
    r.m_ = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    const RhombicPoint t = apply(RhombicPoint{inner.tx_, inner.ty_});
    r.tx_ = t.x;
    r.ty_ = t.y;
    return r;
}

}  // namespace eqbilliards
