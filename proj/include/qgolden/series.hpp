#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "qgolden/bigint.hpp"

namespace qgolden {

// Formal power series known modulo q^N: exactly N = order() coefficients
// c_0..c_{N-1}, all exact integers. Operations on series of different
// orders truncate to the minimum order, and so does equality.
struct TruncatedSeries {
    std::vector<BigInt> coeffs;

    explicit TruncatedSeries(std::vector<BigInt> cs);
    TruncatedSeries(std::initializer_list<long> cs);

    static TruncatedSeries zero(long order);
    static TruncatedSeries one(long order);

    long order() const { return static_cast<long>(coeffs.size()); }
    const BigInt& coeff(std::size_t k) const { return coeffs.at(k); }
    bool is_zero() const;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

// Agreement of all coefficients at the common (minimum) order.
bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplicative inverse at a's order, valid when the constant term is +1
// or -1 (the units of the integers; anything else throws std::domain_error).
// Forward recurrence: b_0 = 1/a_0, b_k = -a_0 * sum_{j=1}^{k} a_j b_{k-j}.
TruncatedSeries inverse(const TruncatedSeries& a);

// num * inverse(den) at the common order.
TruncatedSeries divide(const TruncatedSeries& num, const TruncatedSeries& den);

// First `order` coefficients; requires 1 <= order <= a.order().
TruncatedSeries truncated(const TruncatedSeries& a, long order);

// Multiplication by q^s at fixed order: the top s coefficients fall off
// the end of the window.
TruncatedSeries shifted(const TruncatedSeries& a, long s);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& a);

} // namespace qgolden
