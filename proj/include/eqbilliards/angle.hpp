// Angles of incidence in (0, 90] degrees, keyed by their exact tan^2.

#pragma once

#include "eqbilliards/rational.hpp"
#include "eqbilliards/rhombic.hpp"

#include <compare>
#include <optional>
#include <string>

namespace eqbilliards {

class ExactAngle {
public:
    static ExactAngle right_angle() { return ExactAngle(std::nullopt); }
    static ExactAngle from_tan_squared(Rational t);

    /// Angle between a direction and a line running along `edge`.
    static ExactAngle between(const RhombicVector& dir, const RhombicVector& edge);

    bool is_right() const { return !tan_sq_.has_value(); }
    /// Throws std::logic_error for the right angle.
    const Rational& tan_squared() const;

    double degrees() const;
    std::string str() const;

    /// 30 <= angle <= 60, decided exactly as 1/3 <= tan^2 <= 3.
    bool in_representation_range() const;

    friend bool operator==(const ExactAngle&, const ExactAngle&) = default;
    friend std::strong_ordering operator<=>(const ExactAngle& a, const ExactAngle& b);

private:
    explicit ExactAngle(std::optional<Rational> t) : tan_sq_(std::move(t)) {}

    std::optional<Rational> tan_sq_;  // nullopt is 90 degrees
};

}  // namespace eqbilliards
