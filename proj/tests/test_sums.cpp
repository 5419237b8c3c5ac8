#include <doctest.h>

#include "eulersum/error.hpp"
#include "eulersum/euler.hpp"
#include "eulersum/sums.hpp"
#include "oracles.hpp"

using namespace eulersum;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

}  // namespace

TEST_CASE("t_sum_naive examples") {
    CHECK(t_sum_naive(1, 2) == Rational(-1));
    CHECK(t_sum_naive(0, 5) == Rational(1));
    CHECK(t_sum_naive(3, 0) == Rational(0));
}

TEST_CASE("t_sum_closed examples") {
    CHECK(t_sum_closed(1, 2) == Rational(-1));
    CHECK(t_sum_closed(2, 3) == Rational(3));
    for (std::size_t m = 0; m <= 20; ++m) CHECK(t_sum_closed(m, 0) == Rational(0));
}

TEST_CASE("t_sum_expanded examples") {
    CHECK(t_sum_expanded(1, 2) == Rational(-1));
    CHECK(t_sum_expanded(2, 4) == Rational(-6));
    CHECK_THROWS_AS(t_sum_expanded(0, 3), DomainError);
}

TEST_CASE("m = 0 closed form is the parity of k") {
    for (std::uint64_t k = 0; k <= 20; ++k) CHECK(t_sum_closed(0, k) == Rational(k % 2 == 1 ? 1 : 0));
}

TEST_CASE("parity_residual") {
    CHECK(parity_residual(3, 2).is_zero());
    CHECK(parity_residual(5, 10).is_zero());
    CHECK_THROWS_AS(parity_residual(2, 3), DomainError);
    CHECK_THROWS_AS(parity_residual(2, 0), DomainError);
    CHECK_THROWS_AS(parity_residual(0, 4), DomainError);
}

TEST_CASE("bernoulli_number") {
    CHECK(bernoulli_number(0) == q("1"));
    CHECK(bernoulli_number(1) == q("-1/2"));
    CHECK(bernoulli_number(2) == q("1/6"));
    CHECK(bernoulli_number(3) == q("0"));
    CHECK(bernoulli_number(12) == q("-691/2730"));
    for (std::size_t n = 1; n <= 30; ++n) {
        const auto row = oracle::pascal_row(n + 1);
        Rational acc;
        for (std::size_t k = 0; k <= n; ++k) acc += Rational(row[k]) * bernoulli_number(k);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("s_sum examples") {
    CHECK(s_sum_closed(1, 3) == Rational(3));
    CHECK(s_sum_closed(0, 7) == Rational(7));
    CHECK(s_sum_closed(0, 7) == s_sum_naive(0, 7));
    CHECK(s_sum_closed(2, 4) == Rational(14));
    CHECK(s_sum_naive(2, 4) == Rational(14));
    CHECK(s_sum_naive(5, 0) == Rational(0));
    CHECK(s_sum_naive(0, 1) == Rational(1));
    CHECK(s_sum_closed(5, 0) == Rational(0));
}

TEST_CASE("verify_range sizes and ordering") {
    const auto small = verify_range(2, 2);
    REQUIRE(small.size() == 9);
    for (std::size_t i = 0; i < small.size(); ++i) {
        CHECK(small[i].m == i / 3);
        CHECK(small[i].k == i % 3);
        CHECK(small[i].all_agree);
        CHECK(small[i].expanded_value.has_value() == (small[i].m >= 1));
    }
    const auto single = verify_range(0, 0);
    REQUIRE(single.size() == 1);
    CHECK(single[0].all_agree);
    CHECK_FALSE(single[0].expanded_value.has_value());
}

TEST_CASE("verify_range 40 x 100") {
    const auto reports = verify_range(40, 100);
    CHECK(reports.size() == 4141);
    std::size_t agree = 0;
    for (const auto& r : reports) agree += r.all_agree ? 1 : 0;
    CHECK(agree == 4141);
}

TEST_CASE("naive sum agrees with an independent brute force") {
    for (std::size_t m = 0; m <= 8; ++m) {
        for (std::size_t k = 0; k <= 30; ++k) CHECK(t_sum_naive(m, k) == oracle::brute_alternating_sum(m, k));
    }
}

TEST_CASE("closed form is an integer for every m, k") {
    for (std::size_t m = 0; m <= 40; ++m) {
        for (std::uint64_t k = 0; k <= 60; ++k) CHECK(t_sum_closed(m, k).is_integer());
    }
}

TEST_CASE("closed form on large k") {
    // Frozen: sum_{l<1000} (-1)^l l^3 computed by direct Python summation.
    CHECK(t_sum_closed(3, 1000) == t_sum_naive(3, 1000));
    CHECK(t_sum_closed(3, 1000) == Rational(-499250000));
}
