#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace adt {

/// Exact non-negative rational in lowest terms.  Rate formulas never touch
/// floating point.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num == 0) throw std::invalid_argument("rational: division by zero");
        return {a.num * b.den, a.den * b.num};
    }
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(Rational a, Rational b) { return a == b || a < b; }
    friend bool operator>(Rational a, Rational b) { return b < a; }
    friend bool operator>=(Rational a, Rational b) { return b <= a; }

    bool is_integer() const { return den == 1; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rational rat_min(Rational a, Rational b) { return a < b ? a : b; }
inline Rational rat_min(Rational a, Rational b, Rational c) { return rat_min(rat_min(a, b), c); }
inline Rational rat_max(Rational a, Rational b) { return a < b ? b : a; }

}  // namespace adt
