#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace phasetrop {

using Rational = mpq_class;
using Integer = mpz_class;

// An element of the value group.
using Exponent = Rational;

// Thrown when an operation's precondition does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

// Exponent extended by -infinity, the value of zero.
class ExtExponent {
public:
    ExtExponent() = default;  // -infinity
    ExtExponent(Exponent v) : v_(std::move(v)) {}
    static ExtExponent neg_inf() { return {}; }

    bool is_neg_inf() const { return !v_.has_value(); }
    const Exponent& value() const;

    friend bool operator==(const ExtExponent& a, const ExtExponent& b);
    friend bool operator<(const ExtExponent& a, const ExtExponent& b);
    friend bool operator<=(const ExtExponent& a, const ExtExponent& b) { return !(b < a); }
    friend bool operator>(const ExtExponent& a, const ExtExponent& b) { return b < a; }
    friend bool operator>=(const ExtExponent& a, const ExtExponent& b) { return !(a < b); }
    friend ExtExponent operator+(const ExtExponent& a, const ExtExponent& b);

    std::string str() const { return is_neg_inf() ? "-inf" : to_string(*v_); }

private:
    std::optional<Exponent> v_;
};

inline ExtExponent max(const ExtExponent& a, const ExtExponent& b) { return a < b ? b : a; }

}  // namespace phasetrop
