#include "qgolden/sw.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgolden/combinatorics.hpp"
#include "qgolden/compositions.hpp"
#include "qgolden/poly.hpp"
#include "qgolden/qfib.hpp"
#include "qgolden/series.hpp"

namespace qgolden {

namespace {

void require_positive(long n, long m, const char* who)
{
    if (n < 1)
        throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    if (m < 1)
        throw std::invalid_argument(std::string(who) + ": m must be >= 1");
}

} // namespace

BigInt sw_lhs(long n, long m)
{
    require_positive(n, m, "sw_lhs");

    // A part j always contributes binom(n-j, j-1) in first position and
    // binom(n-j, j) elsewhere, so tabulate both once. Parts with j > n
    // (possible only when m > n) get factor 0.
    std::vector<BigInt> head(static_cast<std::size_t>(m) + 1);
    std::vector<BigInt> tail(static_cast<std::size_t>(m) + 1);
    for (long j = 1; j <= m; ++j) {
        head[static_cast<std::size_t>(j)] = j <= n ? binomial(n - j, j - 1) : 0;
        tail[static_cast<std::size_t>(j)] = j <= n ? binomial(n - j, j) : 0;
    }

    BigInt sum = 0;
    for (const Composition& c : CompositionRange(m)) {
        BigInt term = head[static_cast<std::size_t>(c.parts[0])];
        for (std::size_t i = 1; i < c.parts.size(); ++i)
            term *= tail[static_cast<std::size_t>(c.parts[i])];
        if (c.length() % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

BigInt sw_rhs(long m)
{
    if (m < 1)
        throw std::invalid_argument("sw_rhs: m must be >= 1");
    BigInt c = catalan(m - 1);
    return m % 2 == 0 ? c : -c;
}

BigInt sw_gf_coefficient(long n, long m)
{
    require_positive(n, m, "sw_gf_coefficient");

    const TruncatedSeries quotient =
        divide(to_series(qfib_recursive(n - 1), m + 1),
               to_series(qfib_recursive(n), m + 1));
    const TruncatedSeries shifted_quotient = shifted(quotient, 1); // times q
    return -shifted_quotient.coeffs[static_cast<std::size_t>(m)];
}

BigInt sw_geometric(long n, long m)
{
    require_positive(n, m, "sw_geometric");

    const IntPoly one_minus_fn = truncated(IntPoly{1} - qfib_recursive(n), m);
    IntPoly sum{1};
    IntPoly power{1};
    for (long t = 1; t <= m; ++t) {
        power = truncated(power * one_minus_fn, m);
        if (power.is_zero())
            break;
        sum = sum + power;
    }

    const IntPoly product = truncated(qfib_recursive(n - 1) * sum, m);
    // -q * product: the q^m coefficient is the negated q^{m-1} coefficient.
    return -product.coeff(static_cast<std::size_t>(m) - 1);
}

VerificationReport check_sw(long n, long m)
{
    require_positive(n, m, "check_sw");
    if (m > n)
        throw std::invalid_argument(
            "check_sw: the identity's hypothesis requires m <= n");

    const BigInt closed = sw_rhs(m);
    const std::pair<const char*, BigInt> routes[] = {
        {"composition sum", sw_lhs(n, m)},
        {"series quotient", sw_gf_coefficient(n, m)},
        {"geometric expansion", sw_geometric(n, m)},
        {"closed form", closed},
    };

    VerificationReport rep;
    rep.check = "sw";
    rep.parameters = {{"n", n}, {"m", m}};
    rep.passed = true;
    for (const auto& [name, value] : routes) {
        rep.lhs.push_back(to_decimal(value));
        rep.rhs.push_back(to_decimal(closed));
        if (rep.passed && value != closed) {
            rep.passed = false;
            rep.detail = std::string(name) + " disagrees with closed form: " +
                         to_decimal(value) + " vs " + to_decimal(closed);
        }
    }
    return rep;
}

} // namespace qgolden
