#include "eulersum/series.hpp"

#include <algorithm>

#include "eulersum/error.hpp"

namespace eulersum {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw DomainError("truncated series needs at least one coefficient");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator+=(const Rational& constant) {
    coeffs_[0] += constant;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    const std::size_t order = std::min(lhs.order(), rhs.order());
    TruncatedSeries out(order);
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc;
        for (std::size_t j = 0; j <= n; ++j) acc += lhs.coeffs_[j] * rhs.coeffs_[n - j];
        out.coeffs_[n] = std::move(acc);
    }
    return out;
}

BigInt factorial(unsigned long n) {
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

TruncatedSeries series_exp_scaled(const Rational& a, std::size_t order) {
    std::vector<Rational> coeffs(order + 1);
    coeffs[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) coeffs[n] = coeffs[n - 1] * a / Rational(n);
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries series_reciprocal(const TruncatedSeries& s) {
    if (s[0].is_zero()) throw ZeroConstantTerm("series with zero constant term is not invertible");
    const Rational inv0 = Rational(1) / s[0];
    std::vector<Rational> r(s.order() + 1);
    r[0] = inv0;
    // r_n = -(1/s_0) * sum_{j=1}^{n} s_j r_{n-j}
    for (std::size_t n = 1; n <= s.order(); ++n) {
        Rational acc;
        for (std::size_t j = 1; j <= n; ++j) acc += s[j] * r[n - j];
        r[n] = -(acc * inv0);
    }
    return TruncatedSeries(std::move(r));
}

}  // namespace eulersum
