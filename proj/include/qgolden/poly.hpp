#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "qgolden/bigint.hpp"

namespace qgolden {

struct TruncatedSeries;

// Dense polynomial in q with exact integer coefficients; coeffs[k] is the
// coefficient of q^k. Canonical form carries no trailing zero coefficient,
// and the zero polynomial is the empty list.
struct IntPoly {
    std::vector<BigInt> coeffs;

    IntPoly() = default;
    IntPoly(std::initializer_list<long> cs);
    explicit IntPoly(std::vector<BigInt> cs);

    bool is_zero() const { return coeffs.empty(); }

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    // Coefficient of q^k; zero outside the stored range.
    const BigInt& coeff(std::size_t k) const;

    void canonicalize();

    friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

IntPoly operator+(const IntPoly& p, const IntPoly& r);
IntPoly operator-(const IntPoly& p);
IntPoly operator-(const IntPoly& p, const IntPoly& r);
IntPoly operator*(const IntPoly& p, const IntPoly& r);

// Multiplication by q^s, s >= 0.
IntPoly shifted(const IntPoly& p, long s);

// Drops every term of degree > max_degree; max_degree < 0 gives zero.
IntPoly truncated(const IntPoly& p, long max_degree);

// Value at q = 1, i.e. the coefficient sum.
BigInt eval_at_one(const IntPoly& p);

// First `order` coefficients (order >= 1), zero-padded past the degree.
TruncatedSeries to_series(const IntPoly& p, long order);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

} // namespace qgolden
