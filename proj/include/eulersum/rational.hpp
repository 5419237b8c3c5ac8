#pragma once

/**
 * Exact rational numbers over GMP integers.
 *
 * A Rational is always in lowest terms with a positive denominator, and zero
 * is 0/1. The text form is "p/q", or "p" when q = 1, with the sign on p.
 */

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eulersum {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : value_(to_bigint(value)) {}  // NOLINT(google-explicit-constructor)

    Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    /// Throws DomainError when `denominator` is zero.
    Rational(const BigInt& numerator, const BigInt& denominator);

    /// Parses the "p/q" / "p" grammar. Input need not be reduced; the result is.
    static Rational parse(std::string_view text);

    /// Parses a decimal literal such as "-0.25", "3", "1e-3" exactly.
    static Rational from_decimal(std::string_view text);

    /// Accepts either grammar: fractions via parse(), everything else via from_decimal().
    static Rational from_string(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string to_string() const { return value_.get_str(); }
    double to_double() const { return value_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws DomainError on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    /// Integer power; negative exponents invert (DomainError for 0^negative). 0^0 = 1.
    Rational pow(long exponent) const;

    const mpq_class& raw() const { return value_; }

private:
    template <std::integral T>
    static BigInt to_bigint(T value) {
        if constexpr (std::is_signed_v<T>) {
            return BigInt(static_cast<long>(value));
        } else {
            return BigInt(static_cast<unsigned long>(value));
        }
    }

    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// C(n, k), zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// (-1)^n as a small integer.
constexpr int alternating_sign(unsigned long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace eulersum
