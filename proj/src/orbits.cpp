#include "eqbilliards/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eqbilliards {

namespace {

bool congruent_mod3(std::int64_t a, std::int64_t b) { return (a - b) % 3 == 0; }

}  // namespace

std::optional<std::string> OrbitClass::why_invalid(std::int64_t x, std::int64_t y) {
    if (x < 0 || y < 0) return "coordinates must be nonnegative";
    if (x > y) return "class representative needs x <= y";
    if (!congruent_mod3(x, y)) return "x and y must be congruent mod 3";
    if (x + y < 2) return "x + y must be at least 2";
    return std::nullopt;
}

OrbitClass::OrbitClass(std::int64_t x, std::int64_t y) : x_(x), y_(y) {
    if (auto why = why_invalid(x, y)) {
        throw InvalidClass("(" + std::to_string(x) + "," + std::to_string(y) + "): " + *why);
    }
}

std::string OrbitClass::str() const {
    return "(" + std::to_string(x_) + "," + std::to_string(y_) + ")";
}

std::string_view to_string(AngleKind k) {
    switch (k) {
        case AngleKind::AllSixty: return "all-sixty";
        case AngleKind::ThirtyNinety: return "thirty-ninety";
        case AngleKind::ThreeDistinct: return "three-distinct";
    }
    return "?";
}

std::vector<ExactAngle> AngleProfile::distinct() const {
    switch (kind) {
        case AngleKind::AllSixty: return {theta};
        case AngleKind::ThirtyNinety: return {theta, psi};
        case AngleKind::ThreeDistinct: return {phi, theta, psi};
    }
    return {};
}

std::int64_t gcd_nonneg(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t period(const OrbitClass& c) { return 2 * c.half_period(); }

Rational length_squared(const OrbitClass& c) {
    return norm_squared(RhombicVector{c.x(), c.y()});
}

double length(const OrbitClass& c) { return std::sqrt(length_squared(c).to_double()); }

AngleProfile angle_profile(const OrbitClass& c) {
    const std::int64_t x = c.x();
    const std::int64_t y = c.y();
    // tan(theta) = sqrt(3) y / (2x + y); the other two follow from the
    // tangent subtraction formula.
    const auto theta = ExactAngle::from_tan_squared(Rational(3 * y * y, (2 * x + y) * (2 * x + y)));
    const auto phi = ExactAngle::from_tan_squared(Rational(3 * x * x, (x + 2 * y) * (x + 2 * y)));
    const auto psi = x == y ? ExactAngle::right_angle()
                            : ExactAngle::from_tan_squared(
                                  Rational(3 * (x + y) * (x + y), (y - x) * (y - x)));
    AngleKind kind = AngleKind::ThreeDistinct;
    if (x == 0) {
        kind = AngleKind::AllSixty;
    } else if (x == y) {
        kind = AngleKind::ThirtyNinety;
    }
    return {kind, theta, phi, psi};
}

bool is_primitive(const OrbitClass& c) {
    const std::int64_t x = c.x();
    const std::int64_t y = c.y();
    if (gcd_nonneg(x, y) == 1) {
        return true;
    }
    if (x % 3 != 0 || y % 3 != 0) {
        return false;
    }
    const std::int64_t a = x / 3;
    const std::int64_t b = y / 3;
    return gcd_nonneg(a, b) == 1 && !congruent_mod3(a, b);
}

Decomposition iterate_decomposition(const OrbitClass& c) {
    const std::int64_t g = gcd_nonneg(c.x(), c.y());
    std::int64_t best = 1;
    for (std::int64_t d = 1; d * d <= g; ++d) {
        if (g % d != 0) continue;
        for (std::int64_t cand : {d, g / d}) {
            if (cand > best && congruent_mod3(c.x() / cand, c.y() / cand)) {
                best = cand;
            }
        }
    }
    return {best, OrbitClass(c.x() / best, c.y() / best)};
}

std::vector<OrbitClass> enumerate_classes(std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("enumerate_classes needs n >= 1");
    }
    std::vector<OrbitClass> out;
    if (n < 2) {
        return out;
    }
    for (std::int64_t x = 0; 2 * x <= n; ++x) {
        if (congruent_mod3(x, n - x)) {
            out.emplace_back(x, n - x);
        }
    }
    return out;
}

std::optional<OddOrbit> classify_odd_period(std::int64_t p) {
    if (p < 1 || p % 2 == 0) {
        throw std::invalid_argument("classify_odd_period needs an odd positive period");
    }
    if (p % 6 != 3) {
        return std::nullopt;
    }
    return OddOrbit{(p + 3) / 6};
}

OrbitClass sample_orbit(std::int64_t n) {
    if (n < 2) {
        throw std::invalid_argument("sample_orbit needs n >= 2");
    }
    if (n % 2 == 0) {
        return {n / 2, n / 2};
    }
    const std::int64_t h = (n - 1) / 2;
    return {h - 1, h + 2};
}

std::optional<OrbitClass> example_primitive(std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("example_primitive needs n >= 1");
    }
    if (n == 2) {
        return OrbitClass(1, 1);
    }
    if (n % 2 == 1 && n >= 3) {
        const std::int64_t k = (n - 1) / 2;
        return OrbitClass(k - 1, k + 2);
    }
    if (n % 4 == 0 && n >= 8) {
        const std::int64_t k = (n - 4) / 4;
        return OrbitClass(2 * k - 1, 2 * k + 5);
    }
    if (n % 4 == 2 && n >= 14) {
        const std::int64_t k = (n - 10) / 4;
        return OrbitClass(2 * k - 1, 2 * k + 11);
    }
    return std::nullopt;
}

}  // namespace eqbilliards
