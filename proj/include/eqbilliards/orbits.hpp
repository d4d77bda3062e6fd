// Periodic orbit classes on the equilateral triangle.
//
// An even-period class is named by the lattice point (x, y) at which its
// fundamental unfolding from O ends: 0 <= x <= y, x = y (mod 3), period
// 2(x + y). Odd-period orbits are the odd iterates of the Fagnano orbit
// and have no lattice point.

#pragma once

#include "eqbilliards/angle.hpp"
#include "eqbilliards/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqbilliards {

class InvalidClass : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class OrbitClass {
public:
    /// Throws InvalidClass unless 0 <= x <= y, x = y (mod 3) and x + y >= 2.
    OrbitClass(std::int64_t x, std::int64_t y);

    /// Reason (x, y) is not a class, or nullopt if it is one.
    static std::optional<std::string> why_invalid(std::int64_t x, std::int64_t y);

    std::int64_t x() const { return x_; }
    std::int64_t y() const { return y_; }
    std::int64_t half_period() const { return x_ + y_; }

    std::string str() const;

    friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
    friend auto operator<=>(const OrbitClass&, const OrbitClass&) = default;

private:
    std::int64_t x_;
    std::int64_t y_;
};

/// gamma^(2k-1), the (2k-1)-fold iterate of the Fagnano orbit.
struct OddOrbit {
    std::int64_t k = 1;

    std::int64_t period() const { return 6 * k - 3; }
    friend bool operator==(const OddOrbit&, const OddOrbit&) = default;
};

enum class AngleKind { AllSixty, ThirtyNinety, ThreeDistinct };

std::string_view to_string(AngleKind k);

/// Incidence angles of a class. theta is the representation angle in
/// [30, 60]; phi = 60 - theta and psi = 120 - theta.
struct AngleProfile {
    AngleKind kind;
    ExactAngle theta;
    ExactAngle phi;
    ExactAngle psi;

    /// The distinct incidence angles a path of this class strikes with,
    /// ascending.
    std::vector<ExactAngle> distinct() const;
};

struct Decomposition {
    std::int64_t d;
    OrbitClass base;
};

std::int64_t gcd_nonneg(std::int64_t a, std::int64_t b);

std::int64_t period(const OrbitClass& c);
Rational length_squared(const OrbitClass& c);
double length(const OrbitClass& c);

AngleProfile angle_profile(const OrbitClass& c);

bool is_primitive(const OrbitClass& c);
Decomposition iterate_decomposition(const OrbitClass& c);

/// Classes of period 2n, ascending in x. Throws std::invalid_argument for n < 1.
std::vector<OrbitClass> enumerate_classes(std::int64_t n);

/// The odd iterate of the Fagnano orbit with period p, if any. Throws
/// std::invalid_argument unless p is odd and positive.
std::optional<OddOrbit> classify_odd_period(std::int64_t p);

/// A representative class of period 2n (n >= 2).
OrbitClass sample_orbit(std::int64_t n);

/// A primitive class of period 2n from the explicit families, or nullopt
/// for n in {1, 4, 6, 10}, where none exists.
std::optional<OrbitClass> example_primitive(std::int64_t n);

}  // namespace eqbilliards
