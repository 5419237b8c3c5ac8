#pragma once

#include <cstddef>
#include <vector>

#include "eulersum/rational.hpp"

namespace eulersum {

/// Power series in t over Rational, truncated after t^order.
///
/// Coefficient n is the plain coefficient of t^n (any 1/n! is already folded
/// in), so multiplication is a truncated Cauchy product. Binary operations on
/// series of different order yield the smaller order.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);

    /// Takes coefficients 0..order; throws DomainError when empty.
    explicit TruncatedSeries(std::vector<Rational> coefficients);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& operator[](std::size_t n) const { return coeffs_[n]; }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Rational& scalar);
    /// Adds a constant to the t^0 coefficient.
    TruncatedSeries& operator+=(const Rational& constant);

    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
    friend TruncatedSeries operator+(TruncatedSeries lhs, const Rational& rhs) { return lhs += rhs; }
    friend TruncatedSeries operator*(TruncatedSeries lhs, const Rational& rhs) { return lhs *= rhs; }
    friend TruncatedSeries operator*(const Rational& lhs, TruncatedSeries rhs) { return rhs *= lhs; }
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// e^{a t}: coefficient n is a^n / n!.
TruncatedSeries series_exp_scaled(const Rational& a, std::size_t order);

/// 1/s to the order of s. Throws ZeroConstantTerm when s[0] == 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& s);

/// n! as an exact integer.
BigInt factorial(unsigned long n);

}  // namespace eulersum
