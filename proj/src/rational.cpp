#include "eqbilliards/rational.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace eqbilliards {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9') {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
    }
    BigInt v(std::string(s.substr(i)));
    return s[0] == '-' ? BigInt(-v) : v;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    value_ = den < 0 ? Rep(BigInt(-num), BigInt(-den)) : Rep(num, den);
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text), BigInt(1));
    }
    return Rational(parse_integer(text.substr(0, slash), text),
                    parse_integer(text.substr(slash + 1), text));
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string Rational::str() const {
    if (is_integer()) {
        return numerator().str();
    }
    return numerator().str() + "/" + denominator().str();
}

BigInt Rational::floor() const {
    const BigInt n = numerator();
    const BigInt d = denominator();
    BigInt q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) {
        q -= 1;
    }
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor(), BigInt(1)); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace eqbilliards
