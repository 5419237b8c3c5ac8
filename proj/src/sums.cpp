#include "eulersum/sums.hpp"

#include <string>

#include "eulersum/error.hpp"
#include "eulersum/euler.hpp"

namespace eulersum {

namespace {

BigInt power(std::uint64_t base, std::size_t exponent) {
    BigInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
    return result;
}

// sum_{l=0}^{m-1} C(m,l) E_l k^{m-l}
Rational truncated_euler_expansion(std::size_t m, std::uint64_t k) {
    const std::vector<Rational> e = euler_numbers_upto(m);
    Rational acc;
    for (std::size_t l = 0; l < m; ++l) acc += Rational(binomial(m, l)) * e[l] * Rational(power(k, m - l));
    return acc;
}

Rational next_bernoulli(std::size_t n, std::span<const Rational> previous) {
    if (n == 0) return 1;
    Rational acc;
    for (std::size_t k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * previous[k];
    return -acc / Rational(n + 1);
}

}  // namespace

Rational t_sum_naive(std::size_t m, std::uint64_t k) {
    BigInt acc = 0;
    BigInt term;
    for (std::uint64_t l = 0; l < k; ++l) {
        mpz_ui_pow_ui(term.get_mpz_t(), l, m);  // GMP defines 0^0 = 1
        if (l % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return Rational(acc);
}

Rational t_sum_closed(std::size_t m, std::uint64_t k) {
    const Rational at_k = euler_polynomial(m).evaluate(Rational(k));
    const Rational signed_at_k = alternating_sign(k + 1) > 0 ? at_k : -at_k;
    return (signed_at_k + euler_number(m)) / Rational(2);
}

Rational t_sum_expanded(std::size_t m, std::uint64_t k) {
    if (m == 0) throw DomainError("expanded alternating-sum form requires m >= 1");
    const int sign = alternating_sign(k + 1);
    return Rational(sign) / Rational(2) * truncated_euler_expansion(m, k) +
           euler_number(m) / Rational(2) * Rational(1 + sign);
}

Rational parity_residual(std::size_t m, std::uint64_t k) {
    if (m == 0) throw DomainError("parity identity requires m >= 1");
    if (k < 2 || k % 2 != 0) throw DomainError("parity identity requires even k >= 2, got " + std::to_string(k));
    return t_sum_closed(m, k) + truncated_euler_expansion(m, k) / Rational(2);
}

BernoulliTable::BernoulliTable() : table_(next_bernoulli) {}

BernoulliTable& shared_bernoulli_table() {
    static BernoulliTable table;
    return table;
}

Rational bernoulli_number(std::size_t n) { return shared_bernoulli_table().number(n); }

Rational s_sum_closed(std::size_t n, std::uint64_t k) {
    const std::vector<Rational> b = shared_bernoulli_table().upto(n);
    Rational acc;
    for (std::size_t i = 0; i <= n; ++i) acc += Rational(binomial(n + 1, i)) * b[i] * Rational(power(k, n + 1 - i));
    return acc / Rational(n + 1);
}

Rational s_sum_naive(std::size_t n, std::uint64_t k) {
    BigInt acc = 0;
    BigInt term;
    for (std::uint64_t l = 0; l < k; ++l) {
        mpz_ui_pow_ui(term.get_mpz_t(), l, n);
        acc += term;
    }
    return Rational(acc);
}

SumReport make_sum_report(std::size_t m, std::uint64_t k) {
    SumReport report;
    report.m = m;
    report.k = k;
    report.closed_value = t_sum_closed(m, k);
    report.oracle_value = t_sum_naive(m, k);
    if (m >= 1) report.expanded_value = t_sum_expanded(m, k);
    report.all_agree = report.closed_value == report.oracle_value &&
                       (!report.expanded_value || *report.expanded_value == report.closed_value);
    return report;
}

std::vector<SumReport> verify_range(std::size_t m_max, std::uint64_t k_max) {
    std::vector<SumReport> reports;
    reports.reserve((m_max + 1) * (k_max + 1));
    for (std::size_t m = 0; m <= m_max; ++m) {
        for (std::uint64_t k = 0; k <= k_max; ++k) reports.push_back(make_sum_report(m, k));
    }
    return reports;
}

}  // namespace eulersum
