#include "eulersum/zeta.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "eulersum/error.hpp"
#include "eulersum/euler.hpp"

namespace eulersum {

namespace {

const Real machine_epsilon = std::numeric_limits<Real>::epsilon();

// Rounding allowance in units of working-precision epsilon.
constexpr int rounding_ulps = 10;

std::string short_string(const Real& value) { return value.str(6); }

}  // namespace

std::string_view to_string(ZetaMethod method) {
    switch (method) {
        case ZetaMethod::exact_negative:
            return "exact-negative";
        case ZetaMethod::series_accel:
            return "series-accel";
        case ZetaMethod::quadrature:
            return "quadrature";
    }
    return "unknown";
}

Real to_real(const Rational& value) {
    return Real(value.numerator().get_str()) / Real(value.denominator().get_str());
}

std::string to_decimal_string(const Real& value, int significant_digits) { return value.str(significant_digits); }

std::string to_fixed_string(const Real& value, int fractional_digits) {
    return value.str(fractional_digits, std::ios_base::fixed);
}

Rational zeta_e_exact(std::size_t n, const Rational& x) { return euler_polynomial(n).evaluate(x); }

ZetaResult zeta_e_exact_result(std::size_t n, const Rational& x) {
    ZetaResult result;
    result.exact = zeta_e_exact(n, x);
    result.value = to_real(*result.exact);
    result.error_bound = 0;
    result.method = ZetaMethod::exact_negative;
    result.terms_or_nodes = 0;
    return result;
}

// Cohen, Rodriguez Villegas and Zagier's weights: for a_k = int_0^1 u^k dmu(u) with
// mu >= 0, sum_k (-1)^k a_k is approximated to within S / d_n by n terms, where
// d_n = ((3+sqrt 8)^n + (3+sqrt 8)^-n) / 2 and S <= a_0.
ZetaResult zeta_e_series(const Real& s, const Real& x, const Real& eps, const SeriesOptions& options) {
    if (!(s > 0)) throw DomainError("series evaluation requires s > 0, got s = " + short_string(s));
    if (!(x > 0)) throw DomainError("series evaluation requires x > 0, got x = " + short_string(x));
    if (!(eps > 0)) throw DomainError("tolerance must be positive");

    const Real first_term = pow(x, -s);
    const Real base = 3 + sqrt(Real(8));

    // Smallest n with truncation bound 2 a_0 / d_n <= eps / 2.
    std::size_t n = 1;
    Real d = (base + 1 / base) / 2;
    {
        Real power = base;
        while (2 * first_term / d > eps / 2) {
            if (n >= options.max_terms) {
                throw ToleranceNotMet("series acceleration needs more than " + std::to_string(options.max_terms) +
                                      " terms for eps = " + short_string(eps));
            }
            ++n;
            power *= base;
            d = (power + 1 / power) / 2;
        }
    }

    Real b = -1;
    Real c = -d;
    Real sum = 0;
    Real magnitude = 0;
    for (std::size_t k = 0; k < n; ++k) {
        c = b - c;
        const Real term = c * pow(k + x, -s);
        sum += term;
        magnitude += abs(term);
        const Real kk(k);
        const Real nn(n);
        b = (kk + nn) * (kk - nn) * b / ((kk + Real(0.5)) * (kk + 1));
    }

    ZetaResult result;
    result.value = 2 * sum / d;
    const Real truncation = 2 * first_term / d;
    const Real rounding = rounding_ulps * machine_epsilon * (2 * magnitude / d + abs(result.value));
    if (rounding > eps / 2) {
        throw ToleranceNotMet("eps = " + short_string(eps) + " is below the working precision");
    }
    result.error_bound = truncation + rounding;
    result.method = ZetaMethod::series_accel;
    result.terms_or_nodes = n;
    return result;
}

ZetaResult zeta_e_integral(const Real& s, const Real& x, const Real& eps, const QuadratureOptions& options) {
    if (!(s >= Real(options.s_min))) {
        throw DomainError("quadrature requires s >= " + std::to_string(options.s_min) + ", got s = " + short_string(s));
    }
    if (!(x > 0)) throw DomainError("quadrature requires x > 0, got x = " + short_string(x));
    if (!(eps > 0)) throw DomainError("tolerance must be positive");

    const Real scale = 2 / boost::math::tgamma(s);
    // Target on the raw integral, leaving half of eps for cut-off and rounding.
    const Real target = eps / (2 * scale);
    const Real cutoff = target * Real(1e-6);

    // t = exp(u - e^{-u}) maps (-inf, inf) onto (0, inf) with double-exponential
    // decay of the transformed integrand at both ends for s > 0, x > 0.
    auto weighted = [&](const Real& u) -> Real {
        const Real t = exp(u - exp(-u));
        const Real jacobian = t * (1 + exp(-u));
        return pow(t, s - 1) * exp(-x * t) / (1 + exp(-t)) * jacobian;
    };

    constexpr double max_abs_u = 12.0;
    std::size_t nodes = 0;
    // Sums weighted(u) over u = offset + j*step for all integers j, stopping each tail
    // once three consecutive terms fall below the cut-off.
    auto lattice_sum = [&](const Real& offset, const Real& step) -> Real {
        Real total = 0;
        for (int direction : {1, -1}) {
            int small_run = 0;
            for (long j = (direction > 0) ? 0 : -1;; j += direction) {
                const Real u = offset + Real(j) * step;
                if (abs(u) > max_abs_u) break;
                const Real term = weighted(u);
                ++nodes;
                total += term;
                small_run = (abs(term) * step < cutoff) ? small_run + 1 : 0;
                if (small_run >= 3) break;
            }
        }
        return total;
    };

    Real step = 1;
    Real sum = lattice_sum(0, step);
    Real estimate = step * sum;
    Real change = 0;
    for (int level = 1;; ++level) {
        // Halving the step only adds the midpoints of the previous lattice.
        sum += lattice_sum(step / 2, step);
        step /= 2;
        const Real refined = step * sum;
        change = abs(refined - estimate);
        estimate = refined;
        if (level >= 3 && change <= target) break;
        if (nodes > options.max_nodes) {
            throw ToleranceNotMet("quadrature node budget of " + std::to_string(options.max_nodes) +
                                  " exhausted for eps = " + short_string(eps));
        }
    }

    ZetaResult result;
    result.value = scale * estimate;
    const Real rounding = rounding_ulps * machine_epsilon * abs(result.value) * Real(nodes);
    result.error_bound = scale * (change + 6 * cutoff) + rounding;
    result.method = ZetaMethod::quadrature;
    result.terms_or_nodes = nodes;
    return result;
}

std::vector<RemarkRow> remark_table() {
    const Rational one(1);
    return {
        {0, zeta_e_exact(0, one), "2(1-1+1-1+...)"},
        {1, zeta_e_exact(1, one), "2(1-2+3-4+...)"},
        {2, zeta_e_exact(2, one), "2(1^2-2^2+3^2-4^2+...)"},
    };
}

}  // namespace eulersum
