#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eulersum/rational.hpp"

namespace eulersum {

/// Dense univariate polynomial with Rational coefficients, lowest degree first.
///
/// Trailing zero coefficients are stripped on construction, so the zero
/// polynomial is the empty coefficient list and its degree is std::nullopt
/// (standing in for negative infinity).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    /// c * x^n
    static Polynomial monomial(std::size_t n, const Rational& c = Rational(1));

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i; zero past the degree.
    Rational coefficient(std::size_t i) const;

    /// Horner evaluation.
    Rational evaluate(const Rational& x) const;

    /// p(x + shift), re-expanded binomially.
    Polynomial shifted(const Rational& shift) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// e.g. "x^2 - 1/2*x + 3"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

inline Rational poly_eval(const Polynomial& p, const Rational& x) { return p.evaluate(x); }

}  // namespace eulersum
