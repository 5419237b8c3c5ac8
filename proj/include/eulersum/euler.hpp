#pragma once

#include <cstddef>
#include <vector>

#include "eulersum/memo_table.hpp"
#include "eulersum/polynomial.hpp"
#include "eulersum/rational.hpp"

namespace eulersum {

/// Euler numbers E_n = E_n(0), generated by 2/(e^t + 1): 1, -1/2, 0, 1/4, 0, -1/2, ...
///
/// Terms come from sum_{k<=n} C(n,k) E_k + E_n = 2*[n == 0], solved for E_n.
class EulerTable {
public:
    EulerTable();

    Rational number(std::size_t n) { return table_.at(n); }
    std::vector<Rational> upto(std::size_t n) { return table_.prefix(n); }
    std::size_t size() const { return table_.size(); }

private:
    MemoTable table_;
};

/// Process-wide table behind the free functions below.
EulerTable& shared_euler_table();

Rational euler_number(std::size_t n);
std::vector<Rational> euler_numbers_upto(std::size_t n);

/// E_n(x) = sum_{k=0}^{n} C(n,k) E_k x^{n-k}; monic of degree n.
Polynomial euler_polynomial(std::size_t n);

/// Expands 2 e^{xt} / (e^t + 1) to t^order and checks n! [t^n] == E_n(x) for every n.
bool verify_generating_function(const Rational& x, std::size_t order);

}  // namespace eulersum
