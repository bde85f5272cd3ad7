#include "aop/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace aop {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::size_t pos1 = 0, pos2 = 0;
        long long n = std::stoll(s.substr(0, slash), &pos1);
        long long d = std::stoll(s.substr(slash + 1), &pos2);
        if (pos1 != slash || pos2 != s.size() - slash - 1)
            throw std::invalid_argument("bad rational literal: " + s);
        return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        std::size_t pos = 0;
        long long n = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad rational literal: " + s);
        return Rational(n);
    }
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.empty() || tail.size() > 15)
        throw std::invalid_argument("bad rational literal: " + s);
    bool negative = !head.empty() && head[0] == '-';
    if (head.empty() || head == "-" || head == "+") head += '0';
    std::size_t pos1 = 0;
    long long whole = std::stoll(head, &pos1);
    if (pos1 != head.size()) throw std::invalid_argument("bad rational literal: " + s);
    long long scale = 1;
    long long fracpart = 0;
    for (char c : tail) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad rational literal: " + s);
        fracpart = fracpart * 10 + (c - '0');
        scale *= 10;
    }
    long long n = whole * scale + (negative ? -fracpart : fracpart);
    return Rational(n, scale);
}

long long Rational::floor_value() const {
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor_value()); }

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    long long d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return std::to_string(num) + "/" + std::to_string(den);
    long long scale = 1;
    for (int i = 0; i < std::max(twos, fives) - twos; ++i) scale *= 2;
    for (int i = 0; i < std::max(twos, fives) - fives; ++i) scale *= 5;
    long long scaled = num * scale;
    long long pow10 = den * scale;
    int digits = 0;
    for (long long p = pow10; p > 1; p /= 10) ++digits;
    bool negative = scaled < 0;
    std::string body = std::to_string(negative ? -scaled : scaled);
    if (static_cast<int>(body.size()) <= digits)
        body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    return (negative ? "-" : "") + body;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

bool Rational::operator<(const Rational& o) const {
    return num * o.den < o.num * den;
}

} // namespace aop
