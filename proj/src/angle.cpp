#include "eqbilliards/angle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eqbilliards {

ExactAngle ExactAngle::from_tan_squared(Rational t) {
    if (t.sign() < 0) {
        throw std::invalid_argument("tan^2 must be nonnegative");
    }
    return ExactAngle(std::move(t));
}

ExactAngle ExactAngle::between(const RhombicVector& dir, const RhombicVector& edge) {
    if (dir.is_zero() || edge.is_zero()) {
        throw std::invalid_argument("angle with a zero vector");
    }
    const Rational d = dot(dir, edge);
    if (d.is_zero()) {
        return right_angle();
    }
    // Cartesian cross = cross * sqrt(3)/2, so tan^2 = 3/4 * cross^2 / dot^2.
    const Rational c = cross(dir, edge);
    return ExactAngle(Rational(3, 4) * c * c / (d * d));
}

const Rational& ExactAngle::tan_squared() const {
    if (!tan_sq_) {
        throw std::logic_error("tan^2 of a right angle is unbounded");
    }
    return *tan_sq_;
}

double ExactAngle::degrees() const {
    if (!tan_sq_) {
        return 90.0;
    }
    return std::atan(std::sqrt(tan_sq_->to_double())) * 180.0 / std::numbers::pi;
}

std::string ExactAngle::str() const {
    return tan_sq_ ? "tan^2=" + tan_sq_->str() : std::string("90deg");
}

bool ExactAngle::in_representation_range() const {
    return tan_sq_ && *tan_sq_ >= Rational(1, 3) && *tan_sq_ <= Rational(3);
}

std::strong_ordering operator<=>(const ExactAngle& a, const ExactAngle& b) {
    if (!a.tan_sq_ || !b.tan_sq_) {
        return !a.tan_sq_ <=> !b.tan_sq_;
    }
    return *a.tan_sq_ <=> *b.tan_sq_;
}

}  // namespace eqbilliards
