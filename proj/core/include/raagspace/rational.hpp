#ifndef RAAGSPACE_RATIONAL_HPP
#define RAAGSPACE_RATIONAL_HPP

#include <compare>
#include <numeric>
#include <string>

#include "raagspace/errors.hpp"

namespace raagspace {

/// Exact rational arithmetic for the small 0/1 systems handled here.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw semantic_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool isZero() const { return num == 0; }
    double toDouble() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator+(Rational a, Rational b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend Rational operator-(Rational a, Rational b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
    friend Rational operator/(Rational a, Rational b) {
        if (b.isZero()) throw semantic_error("rational division by zero");
        return {a.num * b.den, a.den * b.num};
    }
    Rational operator-() const { return {-num, den}; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

} // namespace raagspace

#endif
