#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers.
 *
 * A value type over GMP's mpq_class that is always kept in lowest terms
 * with a positive denominator. Zero is 0/1. There is no conversion from
 * floating point; the only way in is through integers or exact strings.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kslope {

class Rational {
public:
    Rational() = default;
    Rational(long long n);                       // NOLINT: implicit by design of literals
    Rational(long long num, long long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& n);
    explicit Rational(mpq_class q);

    /// Parses "p", "-p" or "p/q" with q > 0. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational reciprocal() const;

    /// Exact power with integer exponent (negative allowed for nonzero base).
    Rational pow(int e) const;

    mpz_class floor() const;
    mpz_class ceil() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    /// Truncated decimal rendering for human-facing text only.
    std::string to_decimal(int digits) const;

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// 2^-k as an exact rational.
Rational pow2_neg(unsigned k);

/// Binomial coefficient C(n, k) as a rational (0 outside 0 <= k <= n).
Rational binomial(int n, int k);

/// n! as a rational.
Rational factorial(int n);

} // namespace kslope
