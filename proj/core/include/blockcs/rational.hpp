#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "blockcs/error.hpp"

namespace bcs {

// Exact rational over 64-bit integers, always stored reduced with a
// positive denominator. Densities, coherences and RIP constants are all
// small exact fractions, so 64 bits (with 128-bit intermediates) is ample.
class Rational {
public:
    constexpr Rational() = default;

    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}

    constexpr Rational(std::int64_t numerator, std::int64_t denominator)
        : num_(numerator), den_(denominator) {
        normalize();
    }

    [[nodiscard]] constexpr std::int64_t num() const { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const { return den_; }

    friend constexpr Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend constexpr Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend constexpr Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend constexpr Rational operator/(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend constexpr bool operator<=(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ <= i128(b.num_) * a.den_;
    }
    friend constexpr bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend constexpr bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    [[nodiscard]] double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // "3/4", or just "3" for integers.
    [[nodiscard]] std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    using i128 = __int128;

    static constexpr Rational from128(i128 n, i128 d) {
        if (d == 0) throw ParameterError("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        const i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw ParameterError("rational overflows 64-bit range");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static constexpr i128 gcd128(i128 a, i128 b) {
        while (b != 0) { const i128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    constexpr void normalize() {
        if (den_ == 0) throw ParameterError("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_{0};
    std::int64_t den_{1};
};

} // namespace bcs
