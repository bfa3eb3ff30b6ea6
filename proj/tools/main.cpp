// Command-line front end: q-Fibonacci polynomial generation, q-golden ratio
// series expansion, and the identity verification suites.
//
// Exit codes: 0 = success / every check passed, 1 = at least one identity
// check failed, 2 = usage error.

#include <algorithm>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qgolden/combinatorics.hpp"
#include "qgolden/golden.hpp"
#include "qgolden/poly.hpp"
#include "qgolden/qfib.hpp"
#include "qgolden/report.hpp"
#include "qgolden/series.hpp"
#include "qgolden/sw.hpp"

namespace {

using nlohmann::json;
using namespace qgolden;

json coeff_array(const std::vector<BigInt>& coeffs)
{
    json arr = json::array();
    for (const BigInt& c : coeffs)
        arr.push_back(to_decimal(c));
    return arr;
}

std::string coeff_line(const std::vector<BigInt>& coeffs)
{
    if (coeffs.empty())
        return "0";
    std::string line;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        line += (k ? " " : "") + to_decimal(coeffs[k]);
    return line;
}

json report_to_json(const VerificationReport& rep)
{
    json params = json::object();
    for (const auto& [name, value] : rep.parameters)
        params[name] = value;
    return json{{"check", rep.check}, {"parameters", params},
                {"lhs", rep.lhs},     {"rhs", rep.rhs},
                {"passed", rep.passed}, {"detail", rep.detail}};
}

void emit_record(const std::string& command, const json& parameters,
                 const json& result)
{
    std::cout << json{{"command", command},
                      {"parameters", parameters},
                      {"result", result}}
                     .dump()
              << "\n";
}

int run_qfib(long n, bool closed_form, bool as_json)
{
    const IntPoly poly = closed_form ? qfib_closed(n) : qfib_recursive(n);
    if (as_json) {
        json params{{"n", n}};
        if (closed_form)
            params["closed_form"] = true;
        emit_record("qfib", params, coeff_array(poly.coeffs));
    } else {
        std::cout << coeff_line(poly.coeffs) << "\n";
    }
    return 0;
}

int run_fib(long n, bool as_json)
{
    const BigInt value = fibonacci(n);
    if (as_json)
        emit_record("fib", json{{"n", n}}, to_decimal(value));
    else
        std::cout << to_decimal(value) << "\n";
    return 0;
}

int run_catalan(long k, bool as_json)
{
    const BigInt value = catalan(k);
    if (as_json)
        emit_record("catalan", json{{"k", k}}, to_decimal(value));
    else
        std::cout << to_decimal(value) << "\n";
    return 0;
}

int run_phi(long order, bool reciprocal, bool as_json)
{
    const TruncatedSeries series =
        reciprocal ? phi_reciprocal_series(order) : phi_series(order);
    if (as_json) {
        json params{{"order", order}};
        if (reciprocal)
            params["reciprocal"] = true;
        emit_record("phi", params, coeff_array(series.coeffs));
    } else {
        std::cout << coeff_line(series.coeffs) << "\n";
    }
    return 0;
}

int run_ratio(long n, long order, bool order_given, bool numeric, bool as_json)
{
    if (numeric) {
        if (n < 1) {
            std::cerr << "error: --numeric requires n >= 1\n";
            return 2;
        }
        const std::string value = golden_ratio_numeric(n);
        if (as_json)
            emit_record("ratio", json{{"n", n}, {"numeric", true}}, value);
        else
            std::cout << value << "\n";
        return 0;
    }

    if (!order_given)
        order = n + 1; // the order through which the ratio matches phi(q)
    const TruncatedSeries series = ratio_series(n, order);
    if (as_json)
        emit_record("ratio", json{{"n", n}, {"order", order}},
                    coeff_array(series.coeffs));
    else
        std::cout << coeff_line(series.coeffs) << "\n";
    return 0;
}

std::vector<VerificationReport> run_proposition_suite(long max_n)
{
    std::vector<VerificationReport> reports;
    for (long n = 0; n <= max_n; ++n) {
        const IntPoly lhs = qfib_recursive(n);
        const IntPoly rhs = qfib_closed(n);

        VerificationReport rep;
        rep.check = "proposition";
        rep.parameters = {{"n", n}};
        rep.passed = true;
        const std::size_t width = std::max(lhs.coeffs.size(), rhs.coeffs.size());
        for (std::size_t k = 0; k < width; ++k) {
            rep.lhs.push_back(to_decimal(lhs.coeff(k)));
            rep.rhs.push_back(to_decimal(rhs.coeff(k)));
            if (rep.passed && lhs.coeff(k) != rhs.coeff(k)) {
                rep.passed = false;
                rep.detail = "first mismatch at q^" + std::to_string(k) + ": " +
                             rep.lhs.back() + " vs " + rep.rhs.back();
            }
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::vector<VerificationReport> run_theorem_suite(long max_n)
{
    std::vector<VerificationReport> reports;
    for (long n = 0; n <= max_n; ++n)
        reports.push_back(check_theorem(n));
    return reports;
}

std::vector<VerificationReport> run_corollary_suite(long max_n)
{
    std::vector<VerificationReport> reports;
    for (long n = 0; n <= max_n; ++n)
        reports.push_back(check_reciprocal_form(n));
    return reports;
}

std::vector<VerificationReport> run_sw_suite(long max_n, long max_m)
{
    std::vector<VerificationReport> reports;
    for (long n = 1; n <= max_n; ++n)
        for (long m = 1; m <= std::min(n, max_m); ++m)
            reports.push_back(check_sw(n, m));
    return reports;
}

int run_verify(const std::string& suite, long max_n, long max_m,
               bool max_m_given, bool as_json)
{
    // The composition-sum identity holds under the hypothesis m <= n, so an
    // explicit request for m beyond n is a usage error; the default bound
    // just clamps.
    if (suite == "sw" || suite == "all") {
        if (max_m_given && max_m > max_n) {
            std::cerr << "error: --max-m must not exceed --max-n "
                         "(the identity requires m <= n)\n";
            return 2;
        }
        max_m = std::min(max_m, max_n);
    }

    std::vector<VerificationReport> reports;
    auto append = [&reports](std::vector<VerificationReport> batch) {
        std::move(batch.begin(), batch.end(), std::back_inserter(reports));
    };
    if (suite == "proposition" || suite == "all")
        append(run_proposition_suite(max_n));
    if (suite == "theorem" || suite == "all")
        append(run_theorem_suite(max_n));
    if (suite == "corollary" || suite == "all")
        append(run_corollary_suite(max_n));
    if (suite == "sw" || suite == "all")
        append(run_sw_suite(max_n, max_m));

#ifdef QGOLDEN_CORRUPT_CHECK
    // Test-build hook: break the first check so the failure reporting and
    // the exit-code path get exercised end to end.
    if (!reports.empty()) {
        VerificationReport& victim = reports.front();
        victim.passed = false;
        if (!victim.lhs.empty())
            victim.lhs.front() += "1";
        victim.detail = "deliberately corrupted check (test build)";
    }
#endif

    const long failed = static_cast<long>(
        std::count_if(reports.begin(), reports.end(),
                      [](const VerificationReport& r) { return !r.passed; }));

    if (as_json) {
        json result = json::array();
        for (const VerificationReport& rep : reports)
            result.push_back(report_to_json(rep));
        std::cout << json{{"command", "verify"},
                          {"parameters",
                           {{"suite", suite}, {"max_n", max_n}, {"max_m", max_m}}},
                          {"passed", failed == 0},
                          {"result", result}}
                         .dump()
                  << "\n";
    } else {
        for (const VerificationReport& rep : reports)
            std::cout << rep.summary() << "\n";
        std::cout << "# summary: " << (reports.size() - static_cast<std::size_t>(failed))
                  << " of " << reports.size() << " checks passed\n";
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"q-Fibonacci polynomials, the q-golden ratio series, and "
                 "exact verification of the identities relating them"};
    app.require_subcommand(1);

    long qfib_n = 0;
    bool qfib_closed_form = false, qfib_json = false;
    CLI::App* cmd_qfib = app.add_subcommand("qfib", "Coefficients of F_n(q)");
    cmd_qfib->add_option("n", qfib_n, "Index n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_qfib->add_flag("--closed-form", qfib_closed_form,
                       "Use the binomial closed form instead of the recurrence");
    cmd_qfib->add_flag("--json", qfib_json, "Emit a JSON record");

    long fib_n = 0;
    bool fib_json = false;
    CLI::App* cmd_fib = app.add_subcommand("fib", "Fibonacci number (F_0 = F_1 = 1)");
    cmd_fib->add_option("n", fib_n, "Index n")->required()->check(CLI::NonNegativeNumber);
    cmd_fib->add_flag("--json", fib_json, "Emit a JSON record");

    long catalan_k = 0;
    bool catalan_json = false;
    CLI::App* cmd_catalan = app.add_subcommand("catalan", "Catalan number C_k");
    cmd_catalan->add_option("k", catalan_k, "Index k")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_catalan->add_flag("--json", catalan_json, "Emit a JSON record");

    long phi_order = 0;
    bool phi_reciprocal = false, phi_json = false;
    CLI::App* cmd_phi =
        app.add_subcommand("phi", "Coefficients of the q-golden ratio series");
    cmd_phi->add_option("--order", phi_order, "Number of coefficients")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_phi->add_flag("--reciprocal", phi_reciprocal,
                      "Expand 1/phi(q) (signed Catalan numbers) instead");
    cmd_phi->add_flag("--json", phi_json, "Emit a JSON record");

    long ratio_n = 0, ratio_order = 0;
    bool ratio_numeric = false, ratio_json = false;
    CLI::App* cmd_ratio =
        app.add_subcommand("ratio", "F_{n+1}(q)/F_n(q) as a truncated series");
    cmd_ratio->add_option("n", ratio_n, "Index n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    CLI::Option* ratio_order_opt =
        cmd_ratio->add_option("--order", ratio_order, "Truncation order (default n+1)")
            ->check(CLI::PositiveNumber);
    cmd_ratio->add_flag("--numeric", ratio_numeric,
                        "Print fibonacci(n+1)/fibonacci(n) as a decimal instead");
    cmd_ratio->add_flag("--json", ratio_json, "Emit a JSON record");

    std::string verify_suite;
    long verify_max_n = 60, verify_max_m = 14;
    bool verify_json = false;
    CLI::App* cmd_verify = app.add_subcommand("verify", "Run an identity check suite");
    cmd_verify
        ->add_option("suite", verify_suite,
                     "One of: proposition, theorem, corollary, sw, all")
        ->required()
        ->check(CLI::IsMember({"proposition", "theorem", "corollary", "sw", "all"}));
    cmd_verify->add_option("--max-n", verify_max_n, "Largest n checked (default 60)")
        ->check(CLI::NonNegativeNumber);
    CLI::Option* verify_max_m_opt =
        cmd_verify->add_option("--max-m", verify_max_m, "Largest m checked (default 14)")
            ->check(CLI::PositiveNumber);
    cmd_verify->add_flag("--json", verify_json, "Emit one JSON record with all reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_qfib->parsed())
            return run_qfib(qfib_n, qfib_closed_form, qfib_json);
        if (cmd_fib->parsed())
            return run_fib(fib_n, fib_json);
        if (cmd_catalan->parsed())
            return run_catalan(catalan_k, catalan_json);
        if (cmd_phi->parsed())
            return run_phi(phi_order, phi_reciprocal, phi_json);
        if (cmd_ratio->parsed())
            return run_ratio(ratio_n, ratio_order, ratio_order_opt->count() > 0,
                             ratio_numeric, ratio_json);
        if (cmd_verify->parsed())
            return run_verify(verify_suite, verify_max_n, verify_max_m,
                              verify_max_m_opt->count() > 0, verify_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
