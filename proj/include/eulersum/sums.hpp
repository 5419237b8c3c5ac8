#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "eulersum/memo_table.hpp"
#include "eulersum/rational.hpp"

namespace eulersum {

/// Alternating power sum T_m(k) = sum_{l=0}^{k-1} (-1)^l l^m, summed term by term
/// in integer arithmetic. 0^0 = 1; k = 0 is the empty sum.
Rational t_sum_naive(std::size_t m, std::uint64_t k);

/// T_m(k) = ((-1)^{k+1} E_m(k) + E_m) / 2.
Rational t_sum_closed(std::size_t m, std::uint64_t k);

/// T_m(k) = (-1)^{k+1}/2 sum_{l<m} C(m,l) E_l k^{m-l} + E_m/2 (1 + (-1)^{k+1}).
/// Requires m >= 1 (DomainError otherwise).
Rational t_sum_expanded(std::size_t m, std::uint64_t k);

/// T_m(k) + 1/2 sum_{l<m} C(m,l) E_l k^{m-l}, which vanishes for even k.
/// Requires m >= 1 and even k >= 2 (DomainError otherwise).
Rational parity_residual(std::size_t m, std::uint64_t k);

/// Bernoulli numbers with B_1 = -1/2, from sum_{k<=n} C(n+1,k) B_k = 0.
class BernoulliTable {
public:
    BernoulliTable();

    Rational number(std::size_t n) { return table_.at(n); }
    std::vector<Rational> upto(std::size_t n) { return table_.prefix(n); }
    std::size_t size() const { return table_.size(); }

private:
    MemoTable table_;
};

BernoulliTable& shared_bernoulli_table();

Rational bernoulli_number(std::size_t n);

/// S_n(k) = 1/(n+1) sum_{i<=n} C(n+1,i) B_i k^{n+1-i}, which equals sum_{l=0}^{k-1} l^n.
Rational s_sum_closed(std::size_t n, std::uint64_t k);

/// sum_{l=0}^{k-1} l^n by direct summation, 0^0 = 1.
Rational s_sum_naive(std::size_t n, std::uint64_t k);

struct SumReport {
    std::size_t m = 0;
    std::uint64_t k = 0;
    Rational closed_value;
    std::optional<Rational> expanded_value;  // absent for m = 0
    Rational oracle_value;
    bool all_agree = false;
};

SumReport make_sum_report(std::size_t m, std::uint64_t k);

/// One report per (m, k) in [0, m_max] x [0, k_max], ordered by m then k.
std::vector<SumReport> verify_range(std::size_t m_max, std::uint64_t k_max);

}  // namespace eulersum
