#include "eulersum/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "eulersum/error.hpp"
#include "eulersum/euler.hpp"
#include "eulersum/json.hpp"
#include "eulersum/sums.hpp"
#include "eulersum/zeta.hpp"

namespace eulersum::cli {

namespace {

using nlohmann::json;

std::string join(const std::vector<Rational>& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += ' ';
        out += v.to_string();
    }
    return out;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

int cmd_euler(const OutputConfig& config, std::size_t n, bool upto, std::ostream& out) {
    if (upto) {
        const auto values = euler_numbers_upto(n);
        if (config.format == Format::json) {
            json list = json::array();
            for (const auto& v : values) list.push_back(to_json(v));
            emit(out, {{"n", n}, {"values", list}});
        } else {
            out << join(values) << '\n';
        }
        return exit_ok;
    }
    const Rational value = euler_number(n);
    if (config.format == Format::json) {
        emit(out, {{"n", n}, {"value", to_json(value)}});
    } else {
        out << value << '\n';
    }
    return exit_ok;
}

int cmd_tsum(const OutputConfig& config, std::size_t m, std::uint64_t k, bool verify, std::ostream& out) {
    if (!verify) {
        const Rational value = t_sum_closed(m, k);
        if (config.format == Format::json) {
            emit(out, {{"m", m}, {"k", k}, {"value", to_json(value)}});
        } else {
            out << value << '\n';
        }
        return exit_ok;
    }
    const SumReport report = make_sum_report(m, k);
    if (config.format == Format::json) {
        json doc = to_json(report);
        doc["value"] = to_json(report.closed_value);
        emit(out, doc);
    } else if (report.all_agree) {
        out << report.closed_value << " (verified: " << (report.expanded_value ? "closed=expanded=naive" : "closed=naive")
            << ")\n";
    } else {
        out << report.closed_value << " (MISMATCH: closed=" << report.closed_value
            << ", expanded=" << (report.expanded_value ? report.expanded_value->to_string() : "n/a")
            << ", naive=" << report.oracle_value << ")\n";
    }
    return report.all_agree ? exit_ok : exit_failure;
}

int cmd_ssum(const OutputConfig& config, std::size_t n, std::uint64_t k, bool verify, std::ostream& out) {
    const Rational value = s_sum_closed(n, k);
    std::optional<Rational> naive;
    if (verify) naive = s_sum_naive(n, k);
    const bool agree = !naive || *naive == value;
    if (config.format == Format::json) {
        json doc = {{"n", n}, {"k", k}, {"value", to_json(value)}};
        if (naive) {
            doc["naive"] = to_json(*naive);
            doc["verified"] = agree;
        }
        emit(out, doc);
    } else if (!naive) {
        out << value << '\n';
    } else if (agree) {
        out << value << " (verified)\n";
    } else {
        out << value << " (MISMATCH: naive=" << *naive << ")\n";
    }
    return agree ? exit_ok : exit_failure;
}

struct ZetaArgs {
    std::string s;
    std::string x = "1";
    std::string method = "auto";
    std::string eps = "1e-12";
};

int cmd_zeta(const OutputConfig& config, const ZetaArgs& args, std::ostream& out) {
    const Rational s = Rational::from_string(args.s);
    const Rational x = Rational::from_string(args.x);
    const Rational eps = Rational::from_string(args.eps);
    const bool non_positive_integer = s.is_integer() && s.sign() <= 0;

    std::string method = args.method;
    if (method == "auto") method = non_positive_integer ? "exact" : "series";

    ZetaResult result;
    if (method == "exact") {
        if (!non_positive_integer) {
            throw DomainError("exact evaluation needs a non-positive integer s, got " + s.to_string());
        }
        result = zeta_e_exact_result((-s).numerator().get_ui(), x);
    } else if (method == "series") {
        result = zeta_e_series(to_real(s), to_real(x), to_real(eps));
    } else {
        result = zeta_e_integral(to_real(s), to_real(x), to_real(eps));
    }

    if (config.format == Format::json) {
        emit(out, to_json(result, s, x));
    } else if (result.exact) {
        out << *result.exact << '\n';
    } else {
        out << to_fixed_string(result.value, config.precision_digits) << " +/- "
            << to_decimal_string(result.error_bound, 3) << " (" << to_string(result.method) << ", "
            << result.terms_or_nodes << (result.method == ZetaMethod::series_accel ? " terms" : " nodes") << ")\n";
    }
    return exit_ok;
}

int cmd_remark_table(const OutputConfig& config, std::ostream& out) {
    const auto rows = remark_table();
    if (config.format == Format::json) {
        json list = json::array();
        for (const auto& row : rows) {
            list.push_back({{"n", row.n},
                            {"s", -static_cast<long>(row.n)},
                            {"exact", to_json(row.exact)},
                            {"series", row.description}});
        }
        emit(out, {{"x", "1"}, {"rows", list}});
        return exit_ok;
    }
    for (const auto& row : rows) {
        const std::string s = row.n == 0 ? "0" : "-" + std::to_string(row.n);
        out << "zeta_E(" << s << ") = " << row.exact << "  = E_" << row.n << "(1)  formally " << row.description
            << '\n';
    }
    return exit_ok;
}

int cmd_verify(const OutputConfig& config, std::size_t m_max, std::uint64_t k_max, bool include_reports,
               std::ostream& out) {
    const auto reports = verify_range(m_max, k_max);
    std::size_t agree = 0;
    const SumReport* first_failure = nullptr;
    for (const auto& report : reports) {
        if (report.all_agree) {
            ++agree;
        } else if (first_failure == nullptr) {
            first_failure = &report;
        }
    }

    std::size_t parity_checked = 0;
    std::size_t parity_violations = 0;
    std::optional<std::pair<std::size_t, std::uint64_t>> first_parity;
    for (std::size_t m = 1; m <= m_max; ++m) {
        for (std::uint64_t k = 2; k <= k_max; k += 2) {
            ++parity_checked;
            if (!parity_residual(m, k).is_zero()) {
                ++parity_violations;
                if (!first_parity) first_parity = {m, k};
            }
        }
    }

    const bool passed = first_failure == nullptr && parity_violations == 0;
    if (config.format == Format::json) {
        json doc = {{"m_max", m_max},
                    {"k_max", k_max},
                    {"cells", reports.size()},
                    {"agree", agree},
                    {"parity_checked", parity_checked},
                    {"parity_violations", parity_violations},
                    {"passed", passed}};
        doc["first_failure"] = first_failure ? json{{"m", first_failure->m}, {"k", first_failure->k}} : json(nullptr);
        doc["first_parity_violation"] =
            first_parity ? json{{"m", first_parity->first}, {"k", first_parity->second}} : json(nullptr);
        if (include_reports) {
            json list = json::array();
            for (const auto& report : reports) list.push_back(to_json(report));
            doc["reports"] = list;
        }
        emit(out, doc);
    } else {
        out << agree << '/' << reports.size() << " agree, parity " << parity_violations << '/' << parity_checked
            << " violations\n";
        if (first_failure != nullptr) {
            out << "first failure at (m=" << first_failure->m << ", k=" << first_failure->k << ")\n";
        }
        if (first_parity) {
            out << "first parity violation at (m=" << first_parity->first << ", k=" << first_parity->second << ")\n";
        }
    }
    return passed ? exit_ok : exit_failure;
}

double median(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    if (samples.size() % 2 == 1) return samples[mid];
    return (samples[mid - 1] + samples[mid]) / 2;
}

double time_ns(const std::function<Rational()>& fn, Rational& result) {
    const auto start = std::chrono::steady_clock::now();
    result = fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::nano>(stop - start).count();
}

int cmd_bench(const OutputConfig& config, std::size_t m, std::uint64_t k, std::size_t reps, std::ostream& out) {
    if (m < 1 || k < 1 || reps < 1) throw DomainError("bench requires m, k, reps >= 1");
    std::vector<double> naive_ns;
    std::vector<double> closed_ns;
    Rational naive_value;
    Rational closed_value;
    bool agree = true;
    for (std::size_t rep = 0; rep < reps; ++rep) {
        naive_ns.push_back(time_ns([&] { return t_sum_naive(m, k); }, naive_value));
        closed_ns.push_back(time_ns([&] { return t_sum_closed(m, k); }, closed_value));
        agree = agree && naive_value == closed_value;
    }
    const double naive_median = median(naive_ns);
    const double closed_median = median(closed_ns);
    const double speedup = closed_median > 0 ? naive_median / closed_median : 0.0;

    if (config.format == Format::json) {
        emit(out, {{"m", m},
                   {"k", k},
                   {"reps", reps},
                   {"value", to_json(closed_value)},
                   {"naive_value", to_json(naive_value)},
                   {"agree", agree},
                   {"naive_ns", naive_median},
                   {"closed_ns", closed_median},
                   {"speedup", speedup}});
    } else {
        out << "T_" << m << "(" << k << ") = " << closed_value << '\n'
            << "naive  median: " << static_cast<std::int64_t>(naive_median) << " ns\n"
            << "closed median: " << static_cast<std::int64_t>(closed_median) << " ns\n"
            << "speedup: " << speedup << "x" << (agree ? "" : " (RESULTS DISAGREE)") << '\n';
    }
    return agree ? exit_ok : exit_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Euler numbers, alternating power sums and the Euler zeta function", "eulersum"};
    app.fallthrough();
    app.require_subcommand(1);

    OutputConfig config;
    std::string format = "plain";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json"}));
    app.add_option("--digits", config.precision_digits, "Fractional digits for numeric display")
        ->envname("EULERSUM_DIGITS")
        ->check(CLI::Range(1, 45));

    std::size_t euler_n = 0;
    bool euler_upto = false;
    auto* euler = app.add_subcommand("euler", "Euler number E_n");
    euler->add_option("n", euler_n)->required();
    euler->add_flag("--upto", euler_upto, "Print E_0 .. E_n");

    std::size_t tsum_m = 0;
    std::uint64_t tsum_k = 0;
    bool tsum_verify = false;
    auto* tsum = app.add_subcommand("tsum", "Alternating power sum T_m(k)");
    tsum->add_option("m", tsum_m)->required();
    tsum->add_option("k", tsum_k)->required();
    tsum->add_flag("--verify", tsum_verify, "Cross-check against the expanded form and direct summation");

    std::size_t ssum_n = 0;
    std::uint64_t ssum_k = 0;
    bool ssum_verify = false;
    auto* ssum = app.add_subcommand("ssum", "Power sum S_n(k) = sum_{l<k} l^n");
    ssum->add_option("n", ssum_n)->required();
    ssum->add_option("k", ssum_k)->required();
    ssum->add_flag("--verify", ssum_verify, "Cross-check against direct summation");

    ZetaArgs zeta_args;
    auto* zeta = app.add_subcommand("zeta", "Euler zeta function zeta_E(s, x)");
    zeta->add_option("s", zeta_args.s)->required();
    zeta->add_option("--x", zeta_args.x, "Shift x (decimal or p/q)");
    zeta->add_option("--method", zeta_args.method)
        ->check(CLI::IsMember({"auto", "exact", "series", "quadrature"}));
    zeta->add_option("--eps", zeta_args.eps, "Absolute tolerance");

    auto* remark = app.add_subcommand("remark-table", "zeta_E at 0, -1, -2 next to their divergent series");

    std::size_t verify_m = 40;
    std::uint64_t verify_k = 200;
    bool verify_reports = false;
    auto* verify = app.add_subcommand("verify", "Sweep closed, expanded and naive alternating sums over a grid");
    verify->add_option("--m-max", verify_m);
    verify->add_option("--k-max", verify_k);
    verify->add_flag("--reports", verify_reports, "Include every grid cell in JSON output");

    std::size_t bench_m = 10;
    std::uint64_t bench_k = 1000000;
    std::size_t bench_reps = 3;
    auto* bench = app.add_subcommand("bench", "Time direct summation against the closed form");
    bench->add_option("--m", bench_m);
    bench->add_option("--k", bench_k);
    bench->add_option("--reps", bench_reps);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    config.format = format == "json" ? Format::json : Format::plain;

    try {
        if (euler->parsed()) return cmd_euler(config, euler_n, euler_upto, out);
        if (tsum->parsed()) return cmd_tsum(config, tsum_m, tsum_k, tsum_verify, out);
        if (ssum->parsed()) return cmd_ssum(config, ssum_n, ssum_k, ssum_verify, out);
        if (zeta->parsed()) return cmd_zeta(config, zeta_args, out);
        if (remark->parsed()) return cmd_remark_table(config, out);
        if (verify->parsed()) return cmd_verify(config, verify_m, verify_k, verify_reports, out);
        if (bench->parsed()) return cmd_bench(config, bench_m, bench_k, bench_reps, out);
    } catch (const ToleranceNotMet& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace eulersum::cli
