#include "qgolden/poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "qgolden/series.hpp"

namespace qgolden {

IntPoly::IntPoly(std::initializer_list<long> cs)
{
    coeffs.reserve(cs.size());
    for (long c : cs)
        coeffs.emplace_back(c);
    canonicalize();
}

IntPoly::IntPoly(std::vector<BigInt> cs) : coeffs(std::move(cs)) { canonicalize(); }

void IntPoly::canonicalize()
{
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
}

const BigInt& IntPoly::coeff(std::size_t k) const
{
    static const BigInt zero(0);
    return k < coeffs.size() ? coeffs[k] : zero;
}

IntPoly operator+(const IntPoly& p, const IntPoly& r)
{
    std::vector<BigInt> out(std::max(p.coeffs.size(), r.coeffs.size()));
    for (std::size_t k = 0; k < p.coeffs.size(); ++k)
        out[k] = p.coeffs[k];
    for (std::size_t k = 0; k < r.coeffs.size(); ++k)
        out[k] += r.coeffs[k];
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& p)
{
    std::vector<BigInt> out(p.coeffs.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = -p.coeffs[k];
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& p, const IntPoly& r) { return p + (-r); }

IntPoly operator*(const IntPoly& p, const IntPoly& r)
{
    if (p.is_zero() || r.is_zero())
        return {};

    // Schoolbook convolution; degrees here stay in the low hundreds.
    std::vector<BigInt> out(p.coeffs.size() + r.coeffs.size() - 1);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        for (std::size_t j = 0; j < r.coeffs.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), p.coeffs[i].get_mpz_t(),
                       r.coeffs[j].get_mpz_t());
    return IntPoly(std::move(out));
}

IntPoly shifted(const IntPoly& p, long s)
{
    if (s < 0)
        throw std::invalid_argument("shifted: shift must be >= 0");
    if (p.is_zero())
        return {};

    std::vector<BigInt> out(static_cast<std::size_t>(s));
    out.insert(out.end(), p.coeffs.begin(), p.coeffs.end());
    return IntPoly(std::move(out));
}

IntPoly truncated(const IntPoly& p, long max_degree)
{
    if (max_degree < 0)
        return {};
    const std::size_t keep =
        std::min(p.coeffs.size(), static_cast<std::size_t>(max_degree) + 1);
    return IntPoly(std::vector<BigInt>(p.coeffs.begin(), p.coeffs.begin() + keep));
}

BigInt eval_at_one(const IntPoly& p)
{
    BigInt sum = 0;
    for (const BigInt& c : p.coeffs)
        sum += c;
    return sum;
}

TruncatedSeries to_series(const IntPoly& p, long order)
{
    if (order < 1)
        throw std::invalid_argument("to_series: order must be >= 1");

    std::vector<BigInt> out(static_cast<std::size_t>(order));
    const std::size_t keep = std::min(p.coeffs.size(), out.size());
    std::copy(p.coeffs.begin(), p.coeffs.begin() + keep, out.begin());
    return TruncatedSeries(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p)
{
    os << '[';
    for (std::size_t k = 0; k < p.coeffs.size(); ++k)
        os << (k ? ", " : "") << p.coeffs[k];
    return os << ']';
}

} // namespace qgolden
