#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "syllogist/errors.hpp"

namespace syllogist {

/// Exact rational with int64 components.  Comparisons cross-multiply in
/// 128-bit so proportion checks never inherit float noise.  Magnitudes here
/// are tiny (counts <= a few hundred, decimal bounds), so overflow is not a
/// practical concern beyond the 128-bit compares.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) raise(errc::domain_error, "rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
};

/// Parses "0.05", "1", ".2", "5e-2", "1/20" into an exact rational.
Rational rational_from_string(const std::string& text);

/// Converts a double via its shortest round-trip decimal; exact for values
/// that were themselves parsed from short decimals (0.05 -> 1/20).
Rational rational_from_double(double v);

} // namespace syllogist
