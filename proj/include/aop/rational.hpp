// aopsynth: exact rational arithmetic for fractional arrival times.
#pragma once

#include <cstdint>
#include <string>

namespace aop {

/// Exact rational number, always normalized (den > 0, gcd(num, den) == 1).
/// Arrival times are small, so 64-bit components are plenty.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d);

    /// Accepts "5", "-2", "2.375" and "7/2"; throws std::invalid_argument
    /// on anything else.  Decimal parsing is exact.
    static Rational parse(const std::string& s);

    long long floor_value() const;
    Rational frac() const; // this - floor, in [0, 1)
    bool is_integer() const { return den == 1; }

    /// Exact textual form: plain decimal when the denominator divides a
    /// power of ten, "num/den" otherwise.
    std::string str() const;

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const = default;
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }
};

} // namespace aop
