#include <doctest.h>

#include "eulersum/error.hpp"
#include "eulersum/euler.hpp"
#include "eulersum/zeta.hpp"
#include "oracles.hpp"

using namespace eulersum;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

// zeta_E(s, x) = 2^{1-s} (zeta(s, x/2) - zeta(s, (x+1)/2)), evaluated with mpmath at 40 digits.
struct HurwitzReference {
    double s;
    double x;
    const char* value;
};

constexpr HurwitzReference hurwitz_references[] = {
    {0.5, 0.25, "2.948226244876191168362340545276035181728"},
    {0.5, 0.5, "1.888516628476400030734621710684316913198"},
    {0.5, 1.0, "1.209797286843260740494531828471910999520"},
    {2.0, 0.25, "30.99347513597381299460036109572551281157"},
    {2.0, 0.5, "7.327724753417752120436828119459072886193"},
    {3.5, 0.25, "255.1775253760598272313644955220670492405"},
    {3.5, 0.5, "22.20660386539336686558375254654426040437"},
    {3.5, 1.0, "1.855107155547896070227218984383641694793"},
};

}  // namespace

TEST_CASE("zeta_e_exact examples") {
    CHECK(zeta_e_exact(0, q("1")) == q("1"));
    CHECK(zeta_e_exact(1, q("1")) == q("1/2"));
    CHECK(zeta_e_exact(2, q("1")) == q("0"));
}

TEST_CASE("zeta_e_exact is E_n(x)") {
    for (std::size_t n = 0; n <= 3; ++n) {
        for (const char* x : {"1/4", "1/2", "3/4", "1"}) {
            CHECK(zeta_e_exact(n, q(x)) == poly_eval(euler_polynomial(n), q(x)));
        }
    }
    const ZetaResult r = zeta_e_exact_result(1, q("1"));
    CHECK(r.method == ZetaMethod::exact_negative);
    CHECK(r.error_bound == 0);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == q("1/2"));
    CHECK(r.value == Real("0.5"));
}

TEST_CASE("oracle values match the known constants") {
    using boost::math::constants::pi;
    const auto ln2 = oracle::two_log_two();
    const auto zeta2 = oracle::pi_squared_over_six();
    const auto leibniz = oracle::pi_leibniz();
    CHECK(abs(ln2.value - 2 * log(Real(2))) <= ln2.tail_bound + Real(1e-45));
    CHECK(abs(zeta2.value - pi<Real>() * pi<Real>() / 6) <= zeta2.tail_bound + Real(1e-45));
    CHECK(abs(leibniz.value - pi<Real>()) <= leibniz.tail_bound + Real(1e-45));
    CHECK(ln2.tail_bound < Real(1e-40));
}

TEST_CASE("series: closed-form targets within the reported bound") {
    const Real eps("1e-12");
    const struct {
        Real s;
        Real x;
        oracle::EulerTransformValue target;
    } cases[] = {
        {Real(1), Real(1), oracle::two_log_two()},
        {Real(2), Real(1), oracle::pi_squared_over_six()},
        {Real(1), Real("0.5"), oracle::pi_leibniz()},
    };
    for (const auto& c : cases) {
        const ZetaResult r = zeta_e_series(c.s, c.x, eps);
        CHECK(r.method == ZetaMethod::series_accel);
        CHECK(r.error_bound <= eps);
        CHECK(abs(r.value - c.target.value) <= r.error_bound + c.target.tail_bound);
        CHECK_FALSE(r.exact.has_value());
    }
    CHECK(to_fixed_string(zeta_e_series(Real(1), Real(1), eps).value, 15) == "1.386294361119891");
}

TEST_CASE("series term count tracks the requested digits") {
    // For a_0 = 1 the count is about 1.31 per decimal digit.
    const ZetaResult r = zeta_e_series(Real(2), Real(1), Real("1e-12"));
    CHECK(r.terms_or_nodes >= 15);
    CHECK(r.terms_or_nodes <= 18);
}

TEST_CASE("series and quadrature against Hurwitz references") {
    for (const auto& ref : hurwitz_references) {
        CAPTURE(ref.s);
        CAPTURE(ref.x);
        const Real expected(ref.value);
        const ZetaResult series = zeta_e_series(Real(ref.s), Real(ref.x), Real("1e-12"));
        CHECK(abs(series.value - expected) <= series.error_bound + Real(1e-35));
        const ZetaResult integral = zeta_e_integral(Real(ref.s), Real(ref.x), Real("1e-10"));
        CHECK(integral.method == ZetaMethod::quadrature);
        CHECK(abs(integral.value - expected) <= integral.error_bound);
    }
}

TEST_CASE("quadrature at s = 2, x = 1 gives pi^2/6") {
    const ZetaResult r = zeta_e_integral(Real(2), Real(1), Real("1e-10"));
    CHECK(abs(r.value - oracle::pi_squared_over_six().value) <= Real("1e-10"));
    CHECK(r.terms_or_nodes > 0);
}

TEST_CASE("monotone refinement") {
    for (const auto& [s, x] : {std::pair{1.0, 1.0}, std::pair{3.5, 0.25}, std::pair{0.5, 0.5}}) {
        Real previous_series = std::numeric_limits<Real>::max();
        Real previous_integral = std::numeric_limits<Real>::max();
        for (const char* eps : {"1e-4", "1e-8", "1e-12", "1e-20", "1e-30"}) {
            const ZetaResult series = zeta_e_series(Real(s), Real(x), Real(eps));
            CHECK(series.error_bound <= previous_series);
            previous_series = series.error_bound;
        }
        for (const char* eps : {"1e-4", "1e-8", "1e-12"}) {
            const ZetaResult integral = zeta_e_integral(Real(s), Real(x), Real(eps));
            CHECK(integral.error_bound <= previous_integral);
            previous_integral = integral.error_bound;
        }
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(zeta_e_series(Real(0), Real(1), Real("1e-12")), DomainError);
    CHECK_THROWS_AS(zeta_e_series(Real(-0.5), Real(1), Real("1e-12")), DomainError);
    CHECK_THROWS_AS(zeta_e_series(Real(1), Real(0), Real("1e-12")), DomainError);
    CHECK_THROWS_AS(zeta_e_series(Real(1), Real(1), Real(0)), DomainError);
    CHECK_THROWS_AS(zeta_e_integral(Real("0.05"), Real(1), Real("1e-10")), DomainError);
    CHECK_THROWS_AS(zeta_e_integral(Real(-1), Real(1), Real("1e-10")), DomainError);
    CHECK_THROWS_AS(zeta_e_integral(Real(1), Real(-1), Real("1e-10")), DomainError);
    // s_min is configurable.
    CHECK_NOTHROW(zeta_e_integral(Real("0.05"), Real(1), Real("1e-6"), QuadratureOptions{0.01, 100000}));
}

TEST_CASE("budgets exhausted") {
    CHECK_THROWS_AS(zeta_e_series(Real(1), Real(1), Real("1e-12"), SeriesOptions{5}), ToleranceNotMet);
    CHECK_THROWS_AS(zeta_e_series(Real(1), Real(1), Real("1e-60")), ToleranceNotMet);
    CHECK_THROWS_AS(zeta_e_integral(Real(1), Real(1), Real("1e-10"), QuadratureOptions{0.1, 20}), ToleranceNotMet);
}

TEST_CASE("remark table rows") {
    const auto rows = remark_table();
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].n == 0);
    CHECK(rows[0].exact == q("1"));
    CHECK(rows[0].description == "2(1-1+1-1+...)");
    CHECK(rows[1].n == 1);
    CHECK(rows[1].exact == q("1/2"));
    CHECK(rows[1].description == "2(1-2+3-4+...)");
    CHECK(rows[2].n == 2);
    CHECK(rows[2].exact == q("0"));
    CHECK(rows[2].description == "2(1^2-2^2+3^2-4^2+...)");
}
