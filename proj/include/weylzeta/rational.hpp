/*
 * rational.hpp
 * ------------
 * Exact rational arithmetic on overflow-checked 64-bit integers.
 * Values are kept reduced with a positive denominator.
 */
#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace weylzeta {

namespace detail {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow (add)");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow (mul)");
    return r;
}

} // namespace detail

class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }

    Rational operator+(const Rational& o) const {
        long long g = std::gcd(den_, o.den_);
        long long l = detail::checked_mul(den_ / g, o.den_);
        long long n = detail::checked_add(detail::checked_mul(num_, o.den_ / g),
                                          detail::checked_mul(o.num_, den_ / g));
        return Rational(n, l);
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator*(const Rational& o) const {
        long long g1 = std::gcd(std::abs(num_), o.den_);
        long long g2 = std::gcd(std::abs(o.num_), den_);
        return Rational(detail::checked_mul(num_ / g1, o.num_ / g2),
                        detail::checked_mul(den_ / g2, o.den_ / g1), raw_tag{});
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return *this * o.inverse();
    }
    Rational inverse() const {
        if (num_ == 0) throw std::domain_error("rational inverse of zero");
        long long n = den_, d = num_;
        if (d < 0) { n = -n; d = -d; }
        return Rational(n, d, raw_tag{});
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        // Cross multiply in 128-bit to dodge overflow.
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // Largest integer <= value.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    // Fractional part in [0,1).
    Rational frac() const { return *this - Rational(floor()); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Parses "n", "-n", "n/d", "-n/d".
    static Rational parse(const std::string& text) {
        std::size_t pos = 0;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        auto read_int = [&](long long& out) {
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw std::invalid_argument("bad rational literal: " + text);
            out = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                out = detail::checked_add(detail::checked_mul(out, 10), text[pos] - '0');
                ++pos;
            }
        };
        long long n = 0, d = 1;
        read_int(n);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            read_int(d);
        }
        if (pos != text.size()) throw std::invalid_argument("bad rational literal: " + text);
        return Rational(neg ? -n : n, d);
    }

private:
    struct raw_tag {};
    // Precondition: already reduced, d > 0.
    Rational(long long n, long long d, raw_tag) : num_(n), den_(d) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(std::abs(num_), den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

// Exact square root when the value is a perfect square of a rational.
inline bool rational_sqrt(const Rational& q, Rational& out) {
    if (q.is_negative()) return false;
    auto isqrt = [](long long v, long long& r) {
        long long s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
        for (long long c = std::max(0LL, s - 2); c <= s + 2; ++c)
            if (c * c == v) { r = c; return true; }
        return false;
    };
    long long rn, rd;
    if (!isqrt(q.num(), rn) || !isqrt(q.den(), rd)) return false;
    out = Rational(rn, rd);
    return true;
}

} // namespace weylzeta
