#include "qgolden/series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace qgolden {

namespace {

long common_order(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return std::min(a.order(), b.order());
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<BigInt> cs) : coeffs(std::move(cs))
{
    if (coeffs.empty())
        throw std::invalid_argument("TruncatedSeries: order must be >= 1");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> cs)
{
    if (cs.size() == 0)
        throw std::invalid_argument("TruncatedSeries: order must be >= 1");
    coeffs.reserve(cs.size());
    for (long c : cs)
        coeffs.emplace_back(c);
}

TruncatedSeries TruncatedSeries::zero(long order)
{
    if (order < 1)
        throw std::invalid_argument("TruncatedSeries: order must be >= 1");
    return TruncatedSeries(std::vector<BigInt>(static_cast<std::size_t>(order)));
}

TruncatedSeries TruncatedSeries::one(long order)
{
    TruncatedSeries s = zero(order);
    s.coeffs[0] = 1;
    return s;
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const BigInt& c) { return c == 0; });
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const long n = common_order(a, b);
    std::vector<BigInt> out(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k)
        out[k] = a.coeffs[k] + b.coeffs[k];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const long n = common_order(a, b);
    std::vector<BigInt> out(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k)
        out[k] = a.coeffs[k] - b.coeffs[k];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a)
{
    std::vector<BigInt> out(a.coeffs.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = -a.coeffs[k];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t n = static_cast<std::size_t>(common_order(a, b));
    std::vector<BigInt> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs[i].get_mpz_t(),
                       b.coeffs[j].get_mpz_t());
    return TruncatedSeries(std::move(out));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const long n = common_order(a, b);
    for (long k = 0; k < n; ++k)
        if (a.coeffs[k] != b.coeffs[k])
            return false;
    return true;
}

TruncatedSeries inverse(const TruncatedSeries& a)
{
    const BigInt& a0 = a.coeffs[0];
    if (a0 != 1 && a0 != -1)
        throw std::domain_error(
            "inverse: constant term must be +1 or -1 for an exact integer inverse");

    const std::size_t n = a.coeffs.size();
    std::vector<BigInt> b(n);
    b[0] = a0; // 1/(+1) = +1, 1/(-1) = -1
    for (std::size_t k = 1; k < n; ++k) {
        BigInt acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            mpz_addmul(acc.get_mpz_t(), a.coeffs[j].get_mpz_t(),
                       b[k - j].get_mpz_t());
        b[k] = -a0 * acc;
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries divide(const TruncatedSeries& num, const TruncatedSeries& den)
{
    const long n = common_order(num, den);
    return truncated(num, n) * inverse(truncated(den, n));
}

TruncatedSeries truncated(const TruncatedSeries& a, long order)
{
    if (order < 1 || order > a.order())
        throw std::invalid_argument("truncated: order must be in [1, a.order()]");
    return TruncatedSeries(std::vector<BigInt>(
        a.coeffs.begin(), a.coeffs.begin() + static_cast<std::size_t>(order)));
}

TruncatedSeries shifted(const TruncatedSeries& a, long s)
{
    if (s < 0)
        throw std::invalid_argument("shifted: shift must be >= 0");

    std::vector<BigInt> out(a.coeffs.size());
    for (std::size_t k = static_cast<std::size_t>(std::min<long>(s, a.order()));
         k < out.size(); ++k)
        out[k] = a.coeffs[k - static_cast<std::size_t>(s)];
    return TruncatedSeries(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& a)
{
    os << '[';
    for (std::size_t k = 0; k < a.coeffs.size(); ++k)
        os << (k ? ", " : "") << a.coeffs[k];
    return os << "] mod q^" << a.order();
}

} // namespace qgolden
