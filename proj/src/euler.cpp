#include "eulersum/euler.hpp"

#include "eulersum/series.hpp"

namespace eulersum {

namespace {

Rational next_euler(std::size_t n, std::span<const Rational> previous) {
    Rational rhs = (n == 0) ? Rational(2) : Rational(0);
    for (std::size_t k = 0; k < n; ++k) rhs -= Rational(binomial(n, k)) * previous[k];
    // C(n,n) E_n + E_n = 2 E_n
    return rhs / Rational(2);
}

}  // namespace

EulerTable::EulerTable() : table_(next_euler) {}

EulerTable& shared_euler_table() {
    static EulerTable table;
    return table;
}

Rational euler_number(std::size_t n) { return shared_euler_table().number(n); }

std::vector<Rational> euler_numbers_upto(std::size_t n) { return shared_euler_table().upto(n); }

Polynomial euler_polynomial(std::size_t n) {
    const std::vector<Rational> e = euler_numbers_upto(n);
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = Rational(binomial(n, k)) * e[k];
    return Polynomial(std::move(coeffs));
}

bool verify_generating_function(const Rational& x, std::size_t order) {
    TruncatedSeries denominator = series_exp_scaled(Rational(1), order) + Rational(1);
    const TruncatedSeries generating = Rational(2) * series_reciprocal(denominator) * series_exp_scaled(x, order);
    for (std::size_t n = 0; n <= order; ++n) {
        if (Rational(factorial(n)) * generating[n] != euler_polynomial(n).evaluate(x)) return false;
    }
    return true;
}

}  // namespace eulersum
