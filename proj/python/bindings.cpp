#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eulersum/cli.hpp"
#include "eulersum/error.hpp"
#include "eulersum/euler.hpp"
#include "eulersum/polynomial.hpp"
#include "eulersum/series.hpp"
#include "eulersum/sums.hpp"
#include "eulersum/zeta.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Rational <-> fractions.Fraction. Loads int, Fraction or a "p/q" / decimal string.
template <>
struct type_caster<eulersum::Rational> {
    PYBIND11_TYPE_CASTER(eulersum::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (PyUnicode_Check(src.ptr())) {
            try {
                value = eulersum::Rational::from_string(src.cast<std::string>());
            } catch (const std::domain_error&) {
                return false;
            }
            return true;
        }
        if (PyFloat_Check(src.ptr()) || !hasattr(src, "numerator") || !hasattr(src, "denominator")) return false;
        const std::string num = py::str(src.attr("numerator"));
        const std::string den = py::str(src.attr("denominator"));
        value = eulersum::Rational(eulersum::BigInt(num), eulersum::BigInt(den));
        return true;
    }

    static handle cast(const eulersum::Rational& src, return_value_policy, handle) {
        static const py::object fraction = py::module_::import("fractions").attr("Fraction");
        const py::object builtin_int = py::module_::import("builtins").attr("int");
        return fraction(builtin_int(src.numerator().get_str()), builtin_int(src.denominator().get_str())).release();
    }
};

}  // namespace pybind11::detail

namespace {

using namespace eulersum;

py::int_ to_py_int(const BigInt& value) { return py::module_::import("builtins").attr("int")(value.get_str()); }

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_eulersum, m) {
    m.doc() = "Exact Euler numbers and polynomials, alternating power sums, and the Euler zeta function";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ZeroConstantTerm>(m, "ZeroConstantTerm", domain_error.ptr());
    py::register_exception<ToleranceNotMet>(m, "ToleranceNotMet", PyExc_RuntimeError);

    m.def("binomial", [](unsigned long n, unsigned long k) { return to_py_int(binomial(n, k)); }, py::arg("n"),
          py::arg("k"));
    m.def(
        "series_exp_scaled",
        [](const Rational& a, std::size_t order) { return series_exp_scaled(a, order).coefficients(); },
        py::arg("a"), py::arg("order"));
    m.def(
        "series_reciprocal",
        [](std::vector<Rational> coefficients) {
            return series_reciprocal(TruncatedSeries(std::move(coefficients))).coefficients();
        },
        py::arg("coefficients"));
    m.def(
        "poly_eval",
        [](std::vector<Rational> coefficients, const Rational& x) {
            return Polynomial(std::move(coefficients)).evaluate(x);
        },
        py::arg("coefficients"), py::arg("x"));

    m.def("euler_number", &euler_number, py::arg("n"));
    m.def("euler_numbers_upto", &euler_numbers_upto, py::arg("n"));
    m.def(
        "euler_polynomial", [](std::size_t n) { return euler_polynomial(n).coefficients(); }, py::arg("n"),
        "Coefficients of E_n(x), lowest degree first.");
    m.def("verify_generating_function", &verify_generating_function, py::arg("x"), py::arg("order"));

    m.def("t_sum_naive", &t_sum_naive, py::arg("m"), py::arg("k"));
    m.def("t_sum_closed", &t_sum_closed, py::arg("m"), py::arg("k"));
    m.def("t_sum_expanded", &t_sum_expanded, py::arg("m"), py::arg("k"));
    m.def("parity_residual", &parity_residual, py::arg("m"), py::arg("k"));
    m.def("bernoulli_number", &bernoulli_number, py::arg("n"));
    m.def("s_sum_closed", &s_sum_closed, py::arg("n"), py::arg("k"));
    m.def("s_sum_naive", &s_sum_naive, py::arg("n"), py::arg("k"));

    py::class_<SumReport>(m, "SumReport")
        .def_readonly("m", &SumReport::m)
        .def_readonly("k", &SumReport::k)
        .def_readonly("closed_value", &SumReport::closed_value)
        .def_readonly("expanded_value", &SumReport::expanded_value)
        .def_readonly("oracle_value", &SumReport::oracle_value)
        .def_readonly("all_agree", &SumReport::all_agree)
        .def("__repr__", [](const SumReport& r) {
            return "SumReport(m=" + std::to_string(r.m) + ", k=" + std::to_string(r.k) +
                   ", closed=" + r.closed_value.to_string() + ", all_agree=" + (r.all_agree ? "True" : "False") + ")";
        });
    m.def("verify_range", &verify_range, py::arg("m_max"), py::arg("k_max"));

    py::class_<ZetaResult>(m, "ZetaResult")
        .def_property_readonly("value", [](const ZetaResult& r) { return r.value.convert_to<double>(); })
        .def_property_readonly("value_str", [](const ZetaResult& r) { return to_decimal_string(r.value); })
        .def_property_readonly("error_bound", [](const ZetaResult& r) { return r.error_bound.convert_to<double>(); })
        .def_property_readonly("method", [](const ZetaResult& r) { return std::string(to_string(r.method)); })
        .def_readonly("terms_or_nodes", &ZetaResult::terms_or_nodes)
        .def_readonly("exact", &ZetaResult::exact)
        .def("__repr__", [](const ZetaResult& r) {
            return "ZetaResult(value=" + to_decimal_string(r.value, 20) + ", error_bound=" +
                   to_decimal_string(r.error_bound, 3) + ", method='" + std::string(to_string(r.method)) + "')";
        });

    m.def("zeta_e_exact", &zeta_e_exact, py::arg("n"), py::arg("x"));
    m.def(
        "zeta_e_series",
        [](double s, double x, double eps, std::size_t max_terms) {
            return zeta_e_series(Real(s), Real(x), Real(eps), SeriesOptions{max_terms});
        },
        py::arg("s"), py::arg("x"), py::arg("eps") = 1e-12, py::arg("max_terms") = 10000);
    m.def(
        "zeta_e_integral",
        [](double s, double x, double eps, double s_min, std::size_t max_nodes) {
            return zeta_e_integral(Real(s), Real(x), Real(eps), QuadratureOptions{s_min, max_nodes});
        },
        py::arg("s"), py::arg("x"), py::arg("eps") = 1e-10, py::arg("s_min") = 0.1, py::arg("max_nodes") = 100000);
    m.def("remark_table", [] {
        py::list rows;
        for (const auto& row : remark_table()) rows.append(py::make_tuple(row.n, row.exact, row.description));
        return rows;
    });

    m.def("run_cli", &run_cli, py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");
}
