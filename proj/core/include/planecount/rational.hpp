#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace planecount {

struct RationalOverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational number. Numerator and denominator are 64-bit and always
/// reduced with denominator >= 1; every intermediate product is computed
/// in 128 bits and the result is range-checked, so arithmetic either is
/// exact or throws RationalOverflowError. No operation ever rounds.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(long long n) : num_(n), den_(1) {}
    Rational(long long num, long long den);

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    /// Largest integer <= value.
    long long floor() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    /// "p" when the value is an integer, "p/q" otherwise.
    std::string to_string() const;

    /// Parses the to_string() forms; throws std::invalid_argument on
    /// anything else (including "p/0").
    static Rational from_string(std::string_view s);

private:
    static Rational make_reduced(__int128 num, __int128 den);

    long long num_;
    long long den_;
};

inline Rational operator+(long long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

}  // namespace planecount
