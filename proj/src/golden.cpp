#include "qgolden/golden.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "qgolden/combinatorics.hpp"
#include "qgolden/poly.hpp"
#include "qgolden/qfib.hpp"

namespace qgolden {

namespace {

// Coefficient-by-coefficient comparison of two equal-order series.
VerificationReport series_report(std::string check,
                                 std::vector<std::pair<std::string, long>> params,
                                 const TruncatedSeries& lhs,
                                 const TruncatedSeries& rhs)
{
    VerificationReport rep;
    rep.check = std::move(check);
    rep.parameters = std::move(params);

    const std::size_t n = lhs.coeffs.size();
    rep.lhs.reserve(n);
    rep.rhs.reserve(n);
    long first_mismatch = -1;
    for (std::size_t k = 0; k < n; ++k) {
        rep.lhs.push_back(to_decimal(lhs.coeffs[k]));
        rep.rhs.push_back(to_decimal(rhs.coeffs[k]));
        if (first_mismatch < 0 && lhs.coeffs[k] != rhs.coeffs[k])
            first_mismatch = static_cast<long>(k);
    }
    rep.passed = first_mismatch < 0;
    if (!rep.passed)
        rep.detail = "first mismatch at q^" + std::to_string(first_mismatch) +
                     ": " + rep.lhs[static_cast<std::size_t>(first_mismatch)] +
                     " vs " + rep.rhs[static_cast<std::size_t>(first_mismatch)];
    return rep;
}

} // namespace

TruncatedSeries phi_series(long order)
{
    if (order < 1)
        throw std::invalid_argument("phi_series: order must be >= 1");

    std::vector<BigInt> coeffs(static_cast<std::size_t>(order));
    coeffs[0] = 1;
    for (long k = 1; k < order; ++k) {
        BigInt c = catalan(k - 1);
        coeffs[static_cast<std::size_t>(k)] = (k % 2 == 0) ? -c : c;
    }
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries phi_reciprocal_series(long order)
{
    if (order < 1)
        throw std::invalid_argument("phi_reciprocal_series: order must be >= 1");

    std::vector<BigInt> coeffs(static_cast<std::size_t>(order));
    for (long k = 0; k < order; ++k) {
        BigInt c = catalan(k);
        coeffs[static_cast<std::size_t>(k)] = (k % 2 == 0) ? c : -c;
    }
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries ratio_series(long n, long order)
{
    if (n < 0)
        throw std::invalid_argument("ratio_series: n must be >= 0");
    return divide(to_series(qfib_recursive(n + 1), order),
                  to_series(qfib_recursive(n), order));
}

VerificationReport check_theorem(long n)
{
    if (n < 0)
        throw std::invalid_argument("check_theorem: n must be >= 0");
    return series_report("theorem", {{"n", n}}, ratio_series(n, n + 1),
                         phi_series(n + 1));
}

VerificationReport check_reciprocal_form(long n)
{
    if (n < 0)
        throw std::invalid_argument("check_reciprocal_form: n must be >= 0");

    const TruncatedSeries lhs = divide(to_series(qfib_recursive(n), n + 1),
                                       to_series(qfib_recursive(n + 1), n + 1));
    return series_report("reciprocal_form", {{"n", n}}, lhs,
                         phi_reciprocal_series(n + 1));
}

std::string golden_ratio_numeric(long n, long frac_digits)
{
    if (n < 1)
        throw std::invalid_argument("golden_ratio_numeric: n must be >= 1");
    if (frac_digits < 1)
        throw std::invalid_argument("golden_ratio_numeric: need >= 1 fractional digit");

    const BigInt scaled = fibonacci_ratio_scaled(n, frac_digits);
    const BigInt scale = pow10(frac_digits);
    const BigInt integer_part = scaled / scale;
    std::string frac = to_decimal(scaled % scale);
    frac.insert(0, static_cast<std::size_t>(frac_digits) - frac.size(), '0');
    return to_decimal(integer_part) + "." + frac;
}

BigInt fibonacci_ratio_scaled(long n, long scale)
{
    if (n < 1)
        throw std::invalid_argument("fibonacci_ratio_scaled: n must be >= 1");
    if (scale < 0)
        throw std::invalid_argument("fibonacci_ratio_scaled: scale must be >= 0");

    BigInt num = fibonacci(n + 1) * pow10(scale);
    BigInt quotient;
    mpz_tdiv_q(quotient.get_mpz_t(), num.get_mpz_t(), fibonacci(n).get_mpz_t());
    return quotient;
}

BigInt golden_ratio_scaled(long scale)
{
    if (scale < 0)
        throw std::invalid_argument("golden_ratio_scaled: scale must be >= 0");

    const BigInt unit = pow10(scale);
    BigInt root; // floor(sqrt(5) * 10^scale)
    const BigInt five = 5 * unit * unit;
    mpz_sqrt(root.get_mpz_t(), five.get_mpz_t());
    return (unit + root) / 2;
}

} // namespace qgolden
