#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace orbitchin {

/// Exact rational number over 64-bit integers.
///
/// Canonical form: denominator > 0 and gcd(|numerator|, denominator) == 1;
/// zero is stored as 0/1.  All intermediate products are carried in 128-bit
/// arithmetic; a result that does not fit back into 64 bits throws
/// std::overflow_error instead of wrapping.  Construction with a zero
/// denominator throws std::domain_error.
class Rational {
public:
    constexpr Rational() noexcept : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) noexcept : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    constexpr std::int64_t numerator() const noexcept { return num_; }
    constexpr std::int64_t denominator() const noexcept { return den_; }

    constexpr bool is_zero() const noexcept { return num_ == 0; }
    constexpr bool is_integer() const noexcept { return den_ == 1; }

    /// -1, 0 or +1.
    constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    /// Largest integer <= *this.
    constexpr std::int64_t floor() const noexcept {
        if (num_ >= 0) return num_ / den_;
        return -((-num_ + den_ - 1) / den_);
    }

    /// Smallest integer >= *this.
    constexpr std::int64_t ceil() const noexcept { return -(-*this).floor(); }

    /// *this - floor(*this), in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    constexpr Rational operator-() const noexcept {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    friend constexpr bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr std::strong_ordering operator<=>(const Rational& a,
                                                      const Rational& b) noexcept {
        // Cross products of canonical int64 values always fit in 128 bits.
        return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
    }

    /// "p/q" in lowest terms; the "/q" is omitted when q == 1.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    using i128 = __int128;

    static constexpr i128 abs128(i128 v) noexcept { return v < 0 ? -v : v; }

    static constexpr i128 gcd128(i128 a, i128 b) noexcept {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static std::int64_t narrow(i128 v) {
        if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
            throw std::overflow_error("rational: value exceeds 64-bit range");
        return static_cast<std::int64_t>(v);
    }

    static Rational make(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            d = 1;
        } else {
            i128 g = gcd128(n, d);
            n /= g;
            d /= g;
        }
        Rational r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace orbitchin
