// Exact rational numbers backed by Boost.Multiprecision.
//
// cpp_rational keeps every value in lowest terms with a positive
// denominator, so equality between two Rationals is structural.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace eqbilliards {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p/q" or a plain integer "p". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_zero() const { return value_.is_zero(); }
    int sign() const { return value_.sign(); }
    bool is_integer() const { return denominator() == 1; }

    double to_double() const { return value_.convert_to<double>(); }
    std::string str() const;

    /// Fractional part in [0, 1).
    Rational frac() const;
    BigInt floor() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational operator-() const { return Rational(-value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    using Rep = boost::multiprecision::cpp_rational;
    explicit Rational(Rep v) : value_(std::move(v)) {}

    Rep value_{0};
};

}  // namespace eqbilliards
