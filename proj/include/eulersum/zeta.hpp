#pragma once

/**
 * The Euler zeta function
 *
 *     zeta_E(s, x) = 2 * sum_{n>=0} (-1)^n / (n + x)^s,
 *
 * evaluated three ways:
 *  - exactly at s = -n (n >= 0), where zeta_E(-n, x) = E_n(x);
 *  - numerically for real s > 0 by accelerating the alternating series;
 *  - numerically from the Mellin-type integral
 *        zeta_E(s, x) = 2/Gamma(s) * int_0^inf t^{s-1} e^{-xt} / (1 + e^{-t}) dt
 *    with double-exponential quadrature.
 *
 * Numeric paths work in 50 significant digits.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "eulersum/rational.hpp"

namespace eulersum {

using Real = boost::multiprecision::cpp_bin_float_50;

enum class ZetaMethod { exact_negative, series_accel, quadrature };

/// "exact-negative", "series-accel" or "quadrature".
std::string_view to_string(ZetaMethod method);

struct ZetaResult {
    Real value;
    Real error_bound;  ///< claimed bound on |value - true value|
    ZetaMethod method = ZetaMethod::series_accel;
    std::size_t terms_or_nodes = 0;
    std::optional<Rational> exact;  ///< set iff method == exact_negative
};

struct SeriesOptions {
    std::size_t max_terms = 10000;
};

struct QuadratureOptions {
    double s_min = 0.1;
    std::size_t max_nodes = 100000;
};

/// zeta_E(-n, x) = E_n(x).
Rational zeta_e_exact(std::size_t n, const Rational& x);

/// zeta_e_exact() wrapped as a ZetaResult with a zero error bound.
ZetaResult zeta_e_exact_result(std::size_t n, const Rational& x);

/// Alternating series with Chebyshev-weight acceleration. Requires s > 0, x > 0, eps > 0
/// (DomainError); throws ToleranceNotMet when eps would need more than max_terms terms.
ZetaResult zeta_e_series(const Real& s, const Real& x, const Real& eps, const SeriesOptions& options = {});

/// Integral representation by double-exponential quadrature. Requires s >= s_min, x > 0,
/// eps > 0 (DomainError); throws ToleranceNotMet when the node budget runs out.
ZetaResult zeta_e_integral(const Real& s, const Real& x, const Real& eps, const QuadratureOptions& options = {});

Real to_real(const Rational& value);

/// Significant-digit decimal form, e.g. "1.38629436111989061883446424292".
std::string to_decimal_string(const Real& value, int significant_digits = 30);

/// Fixed notation with the given number of fractional digits.
std::string to_fixed_string(const Real& value, int fractional_digits);

struct RemarkRow {
    std::size_t n;  ///< row is zeta_E(-n) = E_n(1)
    Rational exact;
    std::string description;  ///< the formal divergent series
};

/// zeta_E(0), zeta_E(-1), zeta_E(-2) at x = 1.
std::vector<RemarkRow> remark_table();

}  // namespace eulersum
